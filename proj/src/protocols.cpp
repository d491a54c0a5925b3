#include "uec/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace uec {

namespace {

constexpr double kLn2 = 0.6931471805599453;

double lgamma2(double x) { return std::lgamma(x) / kLn2; }  // log2 Gamma

double log2_binomial(int n, int k) {
    return lgamma2(n + 1.0) - lgamma2(k + 1.0) - lgamma2(n - k + 1.0);
}

// SplitMix64, used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

double failure_probability(const YieldDistribution& dist, double R) {
    double s = 0.0;
    for (const auto& e : dist.entries)
        if (e.yield_bits <= R) s += e.probability;
    return std::min(s, 1.0);
}

double strong_converse_probability(const YieldDistribution& dist, double R) {
    double s = 0.0;
    for (const auto& e : dist.entries)
        if (e.yield_bits >= R) s += e.probability;
    return std::min(s, 1.0);
}

double one_minus_total_fidelity(const YieldDistribution& dist, double R) {
    double s = 0.0;
    for (const auto& e : dist.entries) {
        if (e.yield_bits >= R) continue;
        // 1 - 2^{-n(R-x)} without cancellation
        const double delta = dist.n * (R - e.yield_bits);
        s += e.probability * (-std::expm1(-delta * kLn2));
    }
    return s;
}

double total_fidelity(const YieldDistribution& dist, double R) {
    return 1.0 - one_minus_total_fidelity(dist, R);
}

double average_yield(const YieldDistribution& dist) {
    double s = 0.0;
    for (const auto& e : dist.entries) s += e.probability * e.yield_bits;
    return s;
}

double bbps_average_yield_exact(int n, const SchmidtSpectrum& p) {
    if (n < 1) throw std::invalid_argument("bbps_average_yield_exact: n >= 1 required");
    const int d = p.dim();
    const auto& probs = p.probs();
    // expectation over multinomial counts of log2(n!/prod n_i!)
    double total = 0.0;
    std::vector<int> counts(static_cast<std::size_t>(d), 0);
    const double lg_n = lgamma2(n + 1.0);

    // depth-first over compositions; weights in log space
    auto rec = [&](auto&& self, int slot, int remaining, double log_weight,
                   double log_coeff) -> void {
        if (slot == d - 1) {
            const double lw =
                log_weight + (probs[slot] > 0.0
                                  ? remaining * std::log2(probs[slot])
                                  : (remaining == 0 ? 0.0
                                                    : -std::numeric_limits<double>::infinity()));
            const double lc = log_coeff - lgamma2(remaining + 1.0);
            if (std::isfinite(lw)) total += std::exp2(lw + lc) * (lc / n);
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            double lw = log_weight;
            if (k > 0) {
                if (probs[slot] == 0.0) break;
                lw += k * std::log2(probs[slot]);
            }
            self(self, slot + 1, remaining - k, lw, log_coeff - lgamma2(k + 1.0));
        }
    };
    rec(rec, 0, n, 0.0, lg_n);
    return total;
}

GapResult cstar_bbps_gap(int n, const SchmidtSpectrum& p, const SchurOptions& opts) {
    if (!p.strictly_positive() || p.has_repeated_entries())
        throw std::invalid_argument("cstar_bbps_gap: spectrum must be strictly positive with "
                                    "pairwise distinct entries");
    const int d = p.dim();
    if (d > 8) throw std::invalid_argument("cstar_bbps_gap: d > 8 not supported");
    const auto& probs = p.probs();
    const auto delta = staircase_delta(d);

    // analytic candidate for lim n * gap:
    //   C = -(1/V) sum_pi sgn(pi) (prod_i p_i^{delta_pi(i)})
    //        * log2( V * prod_k p_k^{-delta_pi(k)} ),
    // with V = det(p_i^{delta_j}) = prod_{i<j}(p_i - p_j) > 0.
    std::vector<int> perm(d);
    for (int i = 0; i < d; ++i) perm[i] = i;
    double vdm = 1.0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) vdm *= (probs[i] - probs[j]);
    double acc = 0.0;
    do {
        int inv = 0;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                if (perm[i] > perm[j]) ++inv;
        double w = 1.0, log_term = std::log2(vdm);
        for (int i = 0; i < d; ++i) {
            w *= std::pow(probs[i], delta[perm[i]]);
            log_term -= delta[perm[i]] * std::log2(probs[i]);
        }
        acc += (inv % 2 == 0 ? 1.0 : -1.0) * w * log_term;
    } while (std::next_permutation(perm.begin(), perm.end()));

    GapResult r;
    r.analytic_constant = -acc / vdm;
    r.gap_bits = bbps_average_yield_exact(n, p) - average_yield(yield_distribution(n, p, opts));
    return r;
}

double hardy_average_yield(const std::vector<std::pair<double, BigInt>>& schmidt_values) {
    if (schmidt_values.empty()) throw std::invalid_argument("hardy_average_yield: empty input");
    for (std::size_t i = 1; i < schmidt_values.size(); ++i)
        if (schmidt_values[i].first >= schmidt_values[i - 1].first)
            throw std::invalid_argument(
                "hardy_average_yield: values must be strictly decreasing (merge multiplicities)");
    BigInt t(0);
    double total = 0.0;
    for (std::size_t i = 0; i < schmidt_values.size(); ++i) {
        t += schmidt_values[i].second;
        const double next =
            (i + 1 < schmidt_values.size()) ? schmidt_values[i + 1].first : 0.0;
        total += (schmidt_values[i].first - next) * rat_to_double(BigRat(t)) * log2_bigint(t);
    }
    return total;
}

double hardy_qubit_average_yield(int n, const SchmidtSpectrum& p) {
    if (p.dim() != 2) throw std::invalid_argument("hardy_qubit_average_yield: d = 2 only");
    if (n < 1) throw std::invalid_argument("hardy_qubit_average_yield: n >= 1 required");
    const double a = p.probs()[0], b = p.probs()[1];

    if (a == b) return 1.0;  // maximally entangled input: exactly n ebits

    // Distinct n-copy Schmidt values a^{n-j} b^j (decreasing in j) with
    // multiplicity C(n,j). Cumulative counts T_j handled as running
    // log-sum-exp; each term (v_j - v_{j+1}) T_j log2 T_j assembled in
    // log space.
    const double ratio = b / a;
    double log2_T = 0.0;  // log2 of sum_{k<=j} C(n,k), starts at C(n,0)=1
    double total = 0.0;
    for (int j = 0; j <= n; ++j) {
        if (j > 0) {
            const double lc = log2_binomial(n, j);
            const double m = std::max(log2_T, lc);
            log2_T = m + std::log2(std::exp2(log2_T - m) + std::exp2(lc - m));
        }
        const double log2_v = (n - j) * std::log2(a) + j * std::log2(b);
        const double diff_factor = (j < n) ? (1.0 - ratio) : 1.0;  // v_j - v_{j+1} = v_j(1-b/a)
        const double term = std::exp2(log2_v + log2_T) * diff_factor * log2_T;
        total += term;
    }
    return total / n;
}

double hardy_qubit_expansion(int n, const SchmidtSpectrum& p) {
    if (p.dim() != 2) throw std::invalid_argument("hardy_qubit_expansion: d = 2 only");
    const double a = p.probs()[0], b = p.probs()[1];
    if (b <= 0.0 || a == b)
        throw std::invalid_argument("hardy_qubit_expansion: needs distinct positive entries");
    const double rho = b / a;  // smaller/larger, the convergent ratio ordering
    const double h = shannon_entropy(p);
    const double c = -0.5 * std::log2(2.0 * std::numbers::pi * std::numbers::e * a * b) +
                     rho / (1.0 - rho) * std::log2(1.0 / rho) + std::log2(1.0 / (1.0 - rho));
    return h - std::log2(static_cast<double>(n)) / (2.0 * n) + c / n;
}

double estimation_based_bound(int n, double c_n, const SchmidtSpectrum& p) {
    if (n < 1 || c_n < 0.0 || c_n >= n)
        throw std::invalid_argument("estimation_based_bound: need 0 <= c_n < n");
    const double m = n - c_n;
    const double A = expansion_coefficients_bbps(p).log_coeff;
    return m / n * shannon_entropy(p) + A * std::log2(m) / m;
}

SampleCounts sample_yields(const YieldDistribution& dist, std::int64_t count, std::uint64_t seed,
                           Exec exec) {
    if (count < 0) throw std::invalid_argument("sample_yields: negative count");
    const std::size_t m = dist.entries.size();
    std::vector<double> cdf(m);
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        acc += dist.entries[i].probability;
        cdf[i] = acc;
    }
    cdf[m - 1] = std::max(cdf[m - 1], 1.0);  // guard against rounding at the top

    constexpr int kStreams = 64;
    const std::int64_t chunk = count / kStreams;
    const std::int64_t rem = count % kStreams;

    std::vector<std::vector<std::int64_t>> locals(kStreams);
    for_each_index(kStreams, exec, [&](std::int64_t s) {
        std::uint64_t state = seed ^ (0xa0761d6478bd642fULL * static_cast<std::uint64_t>(s + 1));
        std::mt19937_64 rng(splitmix64(state));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        auto& local = locals[static_cast<std::size_t>(s)];
        local.assign(m, 0);
        const std::int64_t mine = chunk + (s < rem ? 1 : 0);
        for (std::int64_t i = 0; i < mine; ++i) {
            const double u = unif(rng);
            const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
            const auto idx = static_cast<std::size_t>(
                it == cdf.end() ? static_cast<std::ptrdiff_t>(m) - 1 : it - cdf.begin());
            ++local[idx];
        }
    });

    SampleCounts out;
    out.seed = seed;
    out.total = count;
    out.counts.assign(m, 0);
    for (const auto& local : locals)
        for (std::size_t i = 0; i < m; ++i) out.counts[i] += local[i];
    return out;
}

}  // namespace uec
