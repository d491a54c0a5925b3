#include "uec/estimation.hpp"

#include <cmath>

#include "uec/rates.hpp"

namespace uec {

EstimatorSample estimator_sample(int n, const YoungIndex& lambda) {
    EstimatorSample s;
    s.n = n;
    s.index = lambda;
    s.h_primary = log2_bigint(dim_v(lambda)) / n;
    std::vector<double> type(lambda.parts.size());
    for (std::size_t i = 0; i < type.size(); ++i)
        type[i] = static_cast<double>(lambda.parts[i]) / n;
    s.h_type = shannon_entropy(type);
    return s;
}

TailExponents estimator_error_exponent(const SchmidtSpectrum& p, double delta,
                                       const std::vector<int>& n_list,
                                       const SchurOptions& opts) {
    if (delta <= 0.0) throw std::invalid_argument("estimator_error_exponent: delta > 0 required");
    const double hp = shannon_entropy(p);
    const double log2d = std::log2(static_cast<double>(p.dim()));

    TailExponents out;
    out.delta = delta;
    out.n_list = n_list;
    out.lower_target =
        hp - delta >= 0.0 ? rate_function(p, hp - delta) : std::numeric_limits<double>::infinity();
    out.upper_target = hp + delta <= log2d ? rate_function(p, hp + delta)
                                           : std::numeric_limits<double>::infinity();

    for (int n : n_list) {
        const auto dist = yield_distribution(n, p, opts);
        double lo = 0.0, up = 0.0;
        for (const auto& e : dist.entries) {
            if (e.yield_bits <= hp - delta) lo += e.probability;
            if (e.yield_bits >= hp + delta) up += e.probability;
        }
        out.lower_probability.push_back(lo);
        out.upper_probability.push_back(up);
        out.lower_exponent.push_back(lo > 0.0 ? -std::log2(lo) / n
                                              : std::numeric_limits<double>::infinity());
        out.upper_exponent.push_back(up > 0.0 ? -std::log2(up) / n
                                              : std::numeric_limits<double>::infinity());
    }
    return out;
}

MseResult estimator_mse(const SchmidtSpectrum& p, int n, const SchurOptions& opts) {
    if (!p.strictly_positive())
        throw std::invalid_argument("estimator_mse: spectrum entries must be > 0");
    const double hp = shannon_entropy(p);
    const auto dist = yield_distribution(n, p, opts);

    double mse_primary = 0.0, mse_type = 0.0;
    for (const auto& e : dist.entries) {
        const auto sample = estimator_sample(n, e.index);
        mse_primary += e.probability * (sample.h_primary - hp) * (sample.h_primary - hp);
        mse_type += e.probability * (sample.h_type - hp) * (sample.h_type - hp);
    }

    double cr = 0.0;
    for (double v : p.probs()) {
        const double dev = -std::log2(v) - hp;
        cr += v * dev * dev;
    }

    MseResult r;
    r.n = n;
    r.n_mse_primary = n * mse_primary;
    r.n_mse_type = n * mse_type;
    r.cr_bound = cr;
    return r;
}

SlopeCheck divergence_slope_check(const SchmidtSpectrum& p, const SchmidtSpectrum& q,
                                  const std::vector<int>& n_list, const SchurOptions& opts) {
    if (!p.strictly_positive() || !q.strictly_positive())
        throw std::invalid_argument("divergence_slope_check: spectra must be strictly positive");
    SlopeCheck out;
    out.n_list = n_list;
    out.divergence = kl_divergence(q.probs(), p.probs());
    for (int n : n_list) {
        const double kl = pairwise_divergence(n, q, p, opts);
        out.residuals.push_back(std::abs(kl / n - out.divergence));
    }
    return out;
}

}  // namespace uec
