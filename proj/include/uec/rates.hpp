#pragma once

#include <vector>

#include "uec/parallel.hpp"
#include "uec/partitions.hpp"
#include "uec/spectrum.hpp"

namespace uec {

// Shannon entropy in bits, with 0*log0 := 0.
double shannon_entropy(const std::vector<double>& p);
double shannon_entropy(const SchmidtSpectrum& p);

// KL divergence in bits; +inf when support(q) is not contained in support(p).
double kl_divergence(const std::vector<double>& q, const std::vector<double>& p);

struct RateQuery {
    SchmidtSpectrum p;
    double rate_bits = 0.0;  // R in [0, log2 d]
};

// Large-deviation rate function
//   D(R||p) = min { D(q||p) : H(q) >= R }   if H(p) <= R
//             min { D(q||p) : H(q) <= R }   if H(p) >  R
// solved along tilted families q ~ p^beta, with support-restricted
// candidates covering the boundary cases a single tilted family misses
// (degenerate maxima of p).
double rate_function(const RateQuery& query);
double rate_function(const SchmidtSpectrum& p, double rate_bits);

// Independent oracle: dense grid minimization over the (sorted) simplex,
// d in {2, 3}. The coarse pass is a parallel kernel; `refine` zooms twice
// around the coarse argmin so the oracle error is far below comparison
// tolerances.
struct GridResult {
    double min_divergence = 0.0;
    std::vector<double> argmin;
};
GridResult rate_function_grid(const SchmidtSpectrum& p, double rate_bits, double step,
                              Exec exec = Exec::parallel, bool refine = true);

// |log2(dim V)/n - H(lambda/n)| <= (d^2+2d)/(2n) * log2(n+d)
struct BoundCheck {
    bool holds = false;
    double deviation = 0.0;  // LHS
    double bound = 0.0;      // RHS
    double margin = 0.0;     // RHS - LHS
};
BoundCheck dimension_entropy_bound_check(const YoungIndex& lambda);

// Exhaustive sweep over every partition with 1 <= n <= n_max.
struct BoundSweep {
    bool all_hold = false;
    double min_margin = 0.0;
    YoungIndex worst;
    std::int64_t checked = 0;
};
BoundSweep dimension_entropy_bound_sweep(int d, int n_max, Exec exec = Exec::parallel);

// Leading finite-size coefficients of the typical-projection protocol's
// average yield: H(p) + A log2(n)/n + B/n + o(1/n).
struct BbpsCoefficients {
    double log_coeff = 0.0;    // A = -(d-1)/2
    double const_coeff = 0.0;  // B = -((d-1)/2 log2(2 pi e) + 1/2 sum log2 p_i)
};
BbpsCoefficients expansion_coefficients_bbps(const SchmidtSpectrum& p);

}  // namespace uec
