#pragma once

#include <string>
#include <vector>

#include "uec/bigint.hpp"

namespace uec {

// Schmidt spectrum: probabilities sorted non-increasing. Spectra built
// from rationals keep an exact representation and enable the exact
// evaluation paths downstream; float spectra are rationalized on demand
// (every double is a dyadic rational) so the same exact core serves both.
class SchmidtSpectrum {
  public:
    static SchmidtSpectrum from_rationals(std::vector<BigRat> probs);
    static SchmidtSpectrum from_doubles(const std::vector<double>& probs);
    // "3/4,1/4" parses as exact rationals, "0.6,0.4" as floats.
    static SchmidtSpectrum parse(const std::string& text);

    int dim() const { return static_cast<int>(probs_.size()); }
    bool exact() const { return exact_; }
    const std::vector<double>& probs() const { return probs_; }
    const std::vector<BigRat>& rationals() const { return rats_; }

    bool strictly_positive() const;
    bool has_repeated_entries() const;
    std::string str() const;

  private:
    SchmidtSpectrum() = default;
    void validate() const;  // sorted, non-negative, sums to 1

    std::vector<double> probs_;
    std::vector<BigRat> rats_;
    bool exact_ = false;
};

}  // namespace uec
