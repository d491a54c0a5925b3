#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "uec/bigint.hpp"

namespace uec {

// Machine-readable experiment record. Rendering is byte-deterministic for
// a fixed (config, seed): doubles print with %.17g and no timestamps.
struct ExperimentReport {
    std::string command;
    nlohmann::json config = nlohmann::json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    nlohmann::json footer = nlohmann::json::object();

    void add_row(std::vector<std::string> row);
    std::string to_json() const;  // carries schema_version
    std::string to_csv() const;   // config and footer as '#' comment lines
};

std::string format_double(double value);
std::string format_rational(const BigRat& value);

}  // namespace uec
