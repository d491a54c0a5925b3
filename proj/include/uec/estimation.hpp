#pragma once

#include <vector>

#include "uec/schur.hpp"

namespace uec {

// Both entropy estimates read off a single measurement outcome lambda:
// the protocol's own log-rank estimate and the type-entropy estimate.
struct EstimatorSample {
    int n = 0;
    YoungIndex index;
    double h_primary = 0.0;  // log2(dim V_lambda)/n
    double h_type = 0.0;     // H(lambda/n)
};
EstimatorSample estimator_sample(int n, const YoungIndex& lambda);

// Exact two-sided tail probabilities Pr{|H_hat - H(p)| >= delta} and their
// exponents, against the constrained rate-function targets. Empty tails
// (threshold beyond the reachable range) report an infinite exponent.
struct TailExponents {
    double delta = 0.0;
    std::vector<int> n_list;
    std::vector<double> lower_probability, upper_probability;
    std::vector<double> lower_exponent, upper_exponent;  // -(1/n) log2 of the tails
    double lower_target = 0.0;  // min_{H(q) <= H(p)-delta} D(q||p)
    double upper_target = 0.0;  // min_{H(q) >= H(p)+delta} D(q||p), +inf if infeasible
};
TailExponents estimator_error_exponent(const SchmidtSpectrum& p, double delta,
                                       const std::vector<int>& n_list,
                                       const SchurOptions& opts = {});

struct MseResult {
    int n = 0;
    double n_mse_primary = 0.0;
    double n_mse_type = 0.0;
    double cr_bound = 0.0;  // Var(-log2 p), the asymptotic floor
};
MseResult estimator_mse(const SchmidtSpectrum& p, int n, const SchurOptions& opts = {});

// Residuals |(1/n) D(Q_q^n || Q_p^n) - D(q||p)| along an n ladder.
struct SlopeCheck {
    std::vector<int> n_list;
    std::vector<double> residuals;
    double divergence = 0.0;  // D(q||p)
};
SlopeCheck divergence_slope_check(const SchmidtSpectrum& p, const SchmidtSpectrum& q,
                                  const std::vector<int>& n_list, const SchurOptions& opts = {});

}  // namespace uec
