#include "uec/report.hpp"

#include <cstdio>
#include <sstream>

namespace uec {

void ExperimentReport::add_row(std::vector<std::string> row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("report: row width does not match columns");
    rows.push_back(std::move(row));
}

std::string ExperimentReport::to_json() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["command"] = command;
    j["config"] = config;
    j["columns"] = columns;
    j["rows"] = rows;
    j["footer"] = footer;
    return j.dump(2) + "\n";
}

std::string ExperimentReport::to_csv() const {
    std::ostringstream os;
    os << "# command=" << command << "\n";
    for (const auto& [key, value] : config.items())
        os << "# " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump())
           << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) os << ',';
        os << columns[i];
    }
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << row[i];
        }
        os << '\n';
    }
    for (const auto& [key, value] : footer.items())
        os << "# " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump())
           << "\n";
    return os.str();
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string format_rational(const BigRat& value) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(value);
    if (boost::multiprecision::denominator(value) != 1)
        os << '/' << boost::multiprecision::denominator(value);
    return os.str();
}

}  // namespace uec
