#include "uec/spectrum.hpp"

#include <cmath>
#include <sstream>

namespace uec {

SchmidtSpectrum SchmidtSpectrum::from_rationals(std::vector<BigRat> probs) {
    SchmidtSpectrum s;
    s.rats_ = std::move(probs);
    s.exact_ = true;
    s.probs_.reserve(s.rats_.size());
    for (const auto& r : s.rats_) s.probs_.push_back(rat_to_double(r));
    s.validate();
    return s;
}

SchmidtSpectrum SchmidtSpectrum::from_doubles(const std::vector<double>& probs) {
    SchmidtSpectrum s;
    s.probs_ = probs;
    s.exact_ = false;
    s.rats_.reserve(probs.size());
    for (double p : probs) s.rats_.push_back(rat_from_double(p));
    s.validate();
    return s;
}

SchmidtSpectrum SchmidtSpectrum::parse(const std::string& text) {
    std::vector<BigRat> rats;
    bool exact = true;
    std::stringstream ss(text);
    std::string tok;
    std::vector<double> dbls;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("spectrum: empty entry");
        const auto slash = tok.find('/');
        if (slash != std::string::npos) {
            rats.emplace_back(BigInt(tok.substr(0, slash)), BigInt(tok.substr(slash + 1)));
            dbls.push_back(0.0);
        } else if (tok.find('.') == std::string::npos && tok.find('e') == std::string::npos &&
                   tok.find('E') == std::string::npos) {
            rats.emplace_back(BigInt(tok));  // bare integer, still exact
            dbls.push_back(0.0);
        } else {
            exact = false;
            std::size_t used = 0;
            const double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("spectrum: bad number '" + tok + "'");
            rats.emplace_back(0);
            dbls.push_back(v);
        }
    }
    if (rats.empty()) throw std::invalid_argument("spectrum: no entries");
    if (exact) return from_rationals(std::move(rats));
    // mixed input (some fractions, some decimals) degrades to floats
    std::stringstream ss2(text);
    std::vector<double> vals;
    std::size_t i = 0;
    while (std::getline(ss2, tok, ',')) {
        const auto slash = tok.find('/');
        if (slash != std::string::npos) {
            vals.push_back(std::stod(tok.substr(0, slash)) / std::stod(tok.substr(slash + 1)));
        } else {
            vals.push_back(std::stod(tok));
        }
        ++i;
    }
    return from_doubles(vals);
}

void SchmidtSpectrum::validate() const {
    if (probs_.empty()) throw std::invalid_argument("spectrum: empty");
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        if (!(probs_[i] >= 0.0)) throw std::invalid_argument("spectrum: negative or NaN entry");
        if (i > 0 && probs_[i] > probs_[i - 1] + 1e-15)
            throw std::invalid_argument("spectrum: entries must be sorted non-increasing");
    }
    if (exact_) {
        BigRat sum(0);
        for (const auto& r : rats_) {
            if (r < 0) throw std::invalid_argument("spectrum: negative entry");
            sum += r;
        }
        if (sum != 1) throw std::invalid_argument("spectrum: exact entries must sum to 1");
        for (std::size_t i = 1; i < rats_.size(); ++i)
            if (rats_[i] > rats_[i - 1])
                throw std::invalid_argument("spectrum: entries must be sorted non-increasing");
    } else {
        double sum = 0.0;
        for (double p : probs_) sum += p;
        if (std::abs(sum - 1.0) > 1e-12)
            throw std::invalid_argument("spectrum: float entries must sum to 1 within 1e-12");
    }
}

bool SchmidtSpectrum::strictly_positive() const {
    for (double p : probs_)
        if (p <= 0.0) return false;
    return true;
}

bool SchmidtSpectrum::has_repeated_entries() const {
    if (exact_) {
        for (std::size_t i = 1; i < rats_.size(); ++i)
            if (rats_[i] == rats_[i - 1]) return true;
        return false;
    }
    for (std::size_t i = 1; i < probs_.size(); ++i)
        if (probs_[i] == probs_[i - 1]) return true;
    return false;
}

std::string SchmidtSpectrum::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        if (i) os << ',';
        if (exact_)
            os << rats_[i];
        else
            os << probs_[i];
    }
    return os.str();
}

}  // namespace uec
