#include "uec/rates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace uec {

namespace {

// Tilted member q_i ~ p_i^beta over the given support, in log space.
std::vector<double> tilted(const std::vector<double>& p, const std::vector<int>& support,
                           double beta) {
    std::vector<double> logw(support.size());
    double mx = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < support.size(); ++i) {
        logw[i] = beta * std::log2(p[static_cast<std::size_t>(support[i])]);
        mx = std::max(mx, logw[i]);
    }
    double z = 0.0;
    for (double& l : logw) {
        l = std::exp2(l - mx);
        z += l;
    }
    std::vector<double> q(p.size(), 0.0);
    for (std::size_t i = 0; i < support.size(); ++i)
        q[static_cast<std::size_t>(support[i])] = logw[i] / z;
    return q;
}

double entropy_of(const std::vector<double>& q) { return shannon_entropy(q); }

// Smallest D(q||p) with H(q) == target, q restricted to `support` and
// tilted; returns +inf when the family cannot reach the target entropy.
double solve_on_support(const std::vector<double>& p, const std::vector<int>& support,
                        double target, double beta_lo, double beta_hi_start) {
    auto H_at = [&](double beta) { return entropy_of(tilted(p, support, beta)); };
    // H is non-increasing in beta along the family.
    double lo = beta_lo, hi = beta_hi_start;
    if (H_at(lo) < target) return std::numeric_limits<double>::infinity();
    while (H_at(hi) > target) {
        hi *= 2.0;
        if (hi > 1e9) return std::numeric_limits<double>::infinity();
    }
    for (int iter = 0; iter < 200 && hi - lo > 1e-10; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (H_at(mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    const auto q = tilted(p, support, 0.5 * (lo + hi));
    return kl_divergence(q, p);
}

}  // namespace

double shannon_entropy(const std::vector<double>& p) {
    double h = 0.0;
    for (double v : p)
        if (v > 0.0) h -= v * std::log2(v);
    return h;
}

double shannon_entropy(const SchmidtSpectrum& p) { return shannon_entropy(p.probs()); }

double kl_divergence(const std::vector<double>& q, const std::vector<double>& p) {
    if (q.size() != p.size()) throw std::invalid_argument("kl_divergence: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0.0) continue;
        if (p[i] == 0.0) return std::numeric_limits<double>::infinity();
        s += q[i] * std::log2(q[i] / p[i]);
    }
    return std::max(s, 0.0);
}

double rate_function(const SchmidtSpectrum& p, double rate_bits) {
    return rate_function(RateQuery{p, rate_bits});
}

double rate_function(const RateQuery& query) {
    const auto& probs = query.p.probs();
    const int d = query.p.dim();
    const double log2d = std::log2(static_cast<double>(d));
    const double R = query.rate_bits;
    if (R < -1e-12 || R > log2d + 1e-12)
        throw std::invalid_argument("rate_function: R outside [0, log2 d]");
    const double hp = shannon_entropy(probs);
    if (std::abs(R - hp) < 1e-14) return 0.0;

    std::vector<int> full(d);
    for (int i = 0; i < d; ++i) full[i] = i;

    if (R > hp) {
        // high branch: min over H(q) >= R; optimum on H(q) = R with beta in [0,1]
        if (R >= log2d - 1e-14) {
            const std::vector<double> uniform(d, 1.0 / d);
            return kl_divergence(uniform, probs);
        }
        auto H_at = [&](double beta) { return entropy_of(tilted(probs, full, beta)); };
        double lo = 0.0, hi = 1.0;  // H(0) = log2 d >= R > H(1) = H(p)
        for (int iter = 0; iter < 200 && hi - lo > 1e-10; ++iter) {
            const double mid = 0.5 * (lo + hi);
            if (H_at(mid) > R)
                lo = mid;
            else
                hi = mid;
        }
        return kl_divergence(tilted(probs, full, 0.5 * (lo + hi)), probs);
    }

    // low branch: min over H(q) <= R, equivalently (constraint binds)
    // minimizing the cross-entropy -sum q_i log2 p_i over {H(q) = R}.
    double best = std::numeric_limits<double>::infinity();

    // When the maximal entries of p are m-fold tied and R <= log2 m, the
    // optimum concentrates on that block with an entropy-R split, which no
    // tilted family reaches: D = -log2(p_max) - R.
    int tie_mult = 1;
    while (tie_mult < d && probs[static_cast<std::size_t>(tie_mult)] == probs[0]) ++tie_mult;
    if (R <= std::log2(static_cast<double>(tie_mult)) + 1e-14)
        best = -std::log2(probs[0]) - R;

    for (int k = d; k >= 1; --k) {
        std::vector<int> support(full.begin(), full.begin() + k);
        double mass = 0.0;
        for (int i = 0; i < k; ++i) mass += probs[static_cast<std::size_t>(i)];
        if (mass <= 0.0) continue;
        std::vector<double> cond(probs.size(), 0.0);
        for (int i = 0; i < k; ++i) cond[static_cast<std::size_t>(i)] = probs[i] / mass;
        if (entropy_of(cond) <= R) {
            best = std::min(best, kl_divergence(cond, probs));
            continue;  // conditional is the in-face optimum; tilting further only raises D
        }
        best = std::min(best, solve_on_support(probs, support, R, 1.0, 2.0));
    }
    return best;
}

GridResult rate_function_grid(const SchmidtSpectrum& p, double rate_bits, double step, Exec exec,
                              bool refine) {
    const int d = p.dim();
    if (d != 2 && d != 3)
        throw std::invalid_argument("rate_function_grid: oracle implemented for d in {2,3}");
    if (step <= 0.0 || step > 0.5) throw std::invalid_argument("rate_function_grid: bad step");
    const auto& probs = p.probs();
    const double hp = shannon_entropy(probs);
    const bool high_branch = rate_bits >= hp;
    const double R = rate_bits;

    auto feasible = [&](double h) { return high_branch ? h >= R : h <= R; };

    struct Best {
        double value = std::numeric_limits<double>::infinity();
        double q1 = 0.0, q2 = 0.0;
    };

    // coarse pass over the sorted simplex, parallel over the q1 axis
    const auto n_steps = static_cast<std::int64_t>(std::llround(1.0 / step));
    auto evaluate_row = [&](std::int64_t i) {
        Best row;
        const double q1 = static_cast<double>(i) / static_cast<double>(n_steps);
        if (d == 2) {
            if (q1 < 0.5) return row;
            const std::vector<double> q{q1, 1.0 - q1};
            const double h = shannon_entropy(q);
            if (feasible(h)) {
                const double v = kl_divergence(q, probs);
                if (v < row.value) row = {v, q1, 1.0 - q1};
            }
            return row;
        }
        // d == 3: q1 >= q2 >= q3 >= 0
        for (std::int64_t j = 0; j <= i; ++j) {
            const double q2 = static_cast<double>(j) / static_cast<double>(n_steps);
            const double q3 = 1.0 - q1 - q2;
            if (q3 < -1e-15 || q3 > q2 + 1e-15) continue;
            const std::vector<double> q{q1, q2, std::max(q3, 0.0)};
            const double h = shannon_entropy(q);
            if (!feasible(h)) continue;
            const double v = kl_divergence(q, probs);
            if (v < row.value) row = {v, q1, q2};
        }
        return row;
    };

    auto rows = indexed_map<Best>(n_steps + 1, exec, evaluate_row);
    Best best;
    for (const auto& row : rows)  // serial reduce, fixed order
        if (row.value < best.value) best = row;

    if (refine && std::isfinite(best.value)) {
        // two zoom passes around the coarse argmin
        double h_box = step;
        double c1 = best.q1, c2 = best.q2;
        for (int level = 0; level < 2; ++level) {
            const double fine = h_box / 50.0;
            Best local = best;
            for (double q1 = c1 - 2 * h_box; q1 <= c1 + 2 * h_box + 1e-18; q1 += fine) {
                if (q1 < 0.0 || q1 > 1.0) continue;
                if (d == 2) {
                    const double q2 = 1.0 - q1;
                    if (q1 < q2 - 1e-15) continue;
                    const std::vector<double> q{q1, q2};
                    if (!feasible(shannon_entropy(q))) continue;
                    const double v = kl_divergence(q, probs);
                    if (v < local.value) local = {v, q1, q2};
                } else {
                    for (double q2 = c2 - 2 * h_box; q2 <= c2 + 2 * h_box + 1e-18; q2 += fine) {
                        const double q3 = 1.0 - q1 - q2;
                        if (q2 < 0.0 || q3 < 0.0 || q1 < q2 || q2 < q3) continue;
                        const std::vector<double> q{q1, q2, q3};
                        if (!feasible(shannon_entropy(q))) continue;
                        const double v = kl_divergence(q, probs);
                        if (v < local.value) local = {v, q1, q2};
                    }
                }
            }
            best = local;
            c1 = best.q1;
            c2 = best.q2;
            h_box = fine;
        }
    }

    GridResult out;
    out.min_divergence = best.value;
    if (d == 2)
        out.argmin = {best.q1, 1.0 - best.q1};
    else
        out.argmin = {best.q1, best.q2, std::max(1.0 - best.q1 - best.q2, 0.0)};
    return out;
}

BoundCheck dimension_entropy_bound_check(const YoungIndex& lambda) {
    const int n = lambda.n();
    const int d = lambda.d();
    if (n < 1) throw std::invalid_argument("dimension_entropy_bound_check: n >= 1 required");
    std::vector<double> type(lambda.parts.size());
    for (std::size_t i = 0; i < type.size(); ++i)
        type[i] = static_cast<double>(lambda.parts[i]) / n;
    const double lhs =
        std::abs(log2_bigint(dim_v(lambda)) / n - shannon_entropy(type));
    const double rhs = static_cast<double>(d * d + 2 * d) / (2.0 * n) *
                       std::log2(static_cast<double>(n + d));
    return BoundCheck{lhs <= rhs, lhs, rhs, rhs - lhs};
}

BoundSweep dimension_entropy_bound_sweep(int d, int n_max, Exec exec) {
    std::vector<YoungIndex> all;
    for (int n = 1; n <= n_max; ++n) {
        auto part = enumerate_young_indices(n, d);
        all.insert(all.end(), part.begin(), part.end());
    }
    factorial(static_cast<unsigned>(n_max + d));
    auto margins = indexed_map<double>(static_cast<std::int64_t>(all.size()), exec,
                                       [&](std::int64_t i) {
                                           return dimension_entropy_bound_check(
                                                      all[static_cast<std::size_t>(i)])
                                               .margin;
                                       });
    BoundSweep sweep;
    sweep.checked = static_cast<std::int64_t>(all.size());
    sweep.min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < margins.size(); ++i) {
        if (margins[i] < sweep.min_margin) {
            sweep.min_margin = margins[i];
            sweep.worst = all[i];
        }
    }
    sweep.all_hold = sweep.min_margin >= 0.0;
    return sweep;
}

BbpsCoefficients expansion_coefficients_bbps(const SchmidtSpectrum& p) {
    if (!p.strictly_positive())
        throw std::invalid_argument("expansion_coefficients_bbps: spectrum entries must be > 0");
    const int d = p.dim();
    double sum_logs = 0.0;
    for (double v : p.probs()) sum_logs += std::log2(v);
    BbpsCoefficients c;
    c.log_coeff = -(d - 1) / 2.0;
    c.const_coeff =
        -((d - 1) / 2.0 * std::log2(2.0 * std::numbers::pi * std::numbers::e) + 0.5 * sum_logs);
    return c;
}

}  // namespace uec
