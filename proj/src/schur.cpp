#include "uec/schur.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>

namespace uec {

namespace {

constexpr double kLn2 = 0.6931471805599453;

std::vector<BigRat> spectrum_rationals(const SchmidtSpectrum& p) { return p.rationals(); }

// det of a small rational matrix by fraction-free-ish Gaussian elimination
BigRat rational_det(std::vector<std::vector<BigRat>> m) {
    const std::size_t k = m.size();
    BigRat det(1);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && m[pivot][col] == 0) ++pivot;
        if (pivot == k) return BigRat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const BigRat inv = BigRat(1) / m[col][col];
        for (std::size_t row = col + 1; row < k; ++row) {
            if (m[row][col] == 0) continue;
            const BigRat factor = m[row][col] * inv;
            for (std::size_t c2 = col; c2 < k; ++c2) m[row][c2] -= factor * m[col][c2];
        }
    }
    return det;
}

// complete homogeneous symmetric polynomials h_0..h_max at p
std::vector<BigRat> complete_homogeneous(const std::vector<BigRat>& p, int max_degree) {
    std::vector<BigRat> h(static_cast<std::size_t>(max_degree) + 1, BigRat(0));
    h[0] = 1;
    for (const BigRat& x : p)
        for (int k = 1; k <= max_degree; ++k) h[k] += x * h[k - 1];
    return h;
}

struct ExactContext {
    std::vector<BigRat> p;
    bool distinct = false;
    BigRat vandermonde;                       // prod_{i<j}(p_i - p_j), bialternant route
    std::vector<std::vector<BigRat>> powers;  // powers[i][e] = p_i^e, bialternant route
    std::vector<BigRat> h;                    // Jacobi-Trudi route

    ExactContext(const std::vector<BigRat>& spectrum, int n) : p(spectrum) {
        const int d = static_cast<int>(p.size());
        distinct = true;
        for (int i = 0; i < d && distinct; ++i)
            for (int j = i + 1; j < d; ++j)
                if (p[i] == p[j]) {
                    distinct = false;
                    break;
                }
        if (distinct && d <= 8) {
            vandermonde = 1;
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) vandermonde *= (p[i] - p[j]);
            powers.resize(d);
            for (int i = 0; i < d; ++i) {
                powers[i].resize(static_cast<std::size_t>(n + d));
                powers[i][0] = 1;
                for (int e = 1; e < n + d; ++e) powers[i][e] = powers[i][e - 1] * p[i];
            }
        } else {
            distinct = false;  // force Jacobi-Trudi
            h = complete_homogeneous(p, n + d);
        }
    }

    BigRat schur(const YoungIndex& lambda) const {
        const int d = static_cast<int>(p.size());
        if (distinct) {
            const auto delta = staircase_delta(d);
            std::vector<int> perm(d);
            std::iota(perm.begin(), perm.end(), 0);
            BigRat numer(0);
            do {
                int inv = 0;
                for (int i = 0; i < d; ++i)
                    for (int j = i + 1; j < d; ++j)
                        if (perm[i] > perm[j]) ++inv;
                BigRat term(1);
                for (int i = 0; i < d; ++i)
                    term *= powers[i][static_cast<std::size_t>(lambda.parts[perm[i]] +
                                                               delta[perm[i]])];
                if (inv % 2 == 0)
                    numer += term;
                else
                    numer -= term;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return numer / vandermonde;
        }
        // Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j})
        std::vector<std::vector<BigRat>> m(d, std::vector<BigRat>(d, BigRat(0)));
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                const int idx = lambda.parts[i] - (i + 1) + (j + 1);
                if (idx >= 0 && idx < static_cast<int>(h.size())) m[i][j] = h[idx];
            }
        }
        return rational_det(std::move(m));
    }
};

// d = 2 closed form in log space: s_{(a,b)} = (pq)^b (p^{K+1}-q^{K+1})/(p-q),
// K = a - b; for p = q the limit is p^n (K+1).
double log2_schur_qubit(int n, int k, double p, double q) {
    const int K = n - 2 * k;
    if (p == q) return n * std::log2(p) + std::log2(static_cast<double>(K + 1));
    const double ratio = q / p;
    return k * (std::log2(p) + std::log2(q)) + (K + 1) * std::log2(p) +
           std::log1p(-std::pow(ratio, K + 1)) / kLn2 - std::log2(p - q);
}

}  // namespace

BigRat schur_bialternant(const YoungIndex& lambda, const std::vector<BigRat>& p) {
    if (!lambda.valid() || lambda.d() != static_cast<int>(p.size()))
        throw std::invalid_argument("schur_bialternant: shape/spectrum size mismatch");
    if (lambda.d() > 8) throw std::invalid_argument("schur_bialternant: d > 8");
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] == p[j])
                throw std::invalid_argument(
                    "schur_bialternant: repeated spectrum entries (use schur_jacobi_trudi)");
    const int d = lambda.d();
    const auto delta = staircase_delta(d);
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    BigRat numer(0), vdm(1);
    do {
        int inv = 0;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                if (perm[i] > perm[j]) ++inv;
        BigRat term(1);
        for (int i = 0; i < d; ++i)
            term *= rat_pow(p[i], static_cast<unsigned>(lambda.parts[perm[i]] + delta[perm[i]]));
        numer += (inv % 2 == 0) ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) vdm *= (p[i] - p[j]);
    return numer / vdm;
}

BigRat schur_jacobi_trudi(const YoungIndex& lambda, const std::vector<BigRat>& p) {
    if (!lambda.valid() || lambda.d() != static_cast<int>(p.size()))
        throw std::invalid_argument("schur_jacobi_trudi: shape/spectrum size mismatch");
    const int d = lambda.d();
    const auto h = complete_homogeneous(p, lambda.parts[0] + d);
    std::vector<std::vector<BigRat>> m(d, std::vector<BigRat>(d, BigRat(0)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const int idx = lambda.parts[i] - (i + 1) + (j + 1);
            if (idx >= 0) m[i][j] = h[static_cast<std::size_t>(idx)];
        }
    return rational_det(std::move(m));
}

BigRat schur_polynomial_exact(const YoungIndex& lambda, const std::vector<BigRat>& p) {
    bool distinct = true;
    for (std::size_t i = 0; i < p.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] == p[j]) {
                distinct = false;
                break;
            }
    if (distinct && lambda.d() <= 8) return schur_bialternant(lambda, p);
    return schur_jacobi_trudi(lambda, p);
}

double schur_polynomial(const YoungIndex& lambda, const SchmidtSpectrum& p) {
    return rat_to_double(schur_polynomial_exact(lambda, spectrum_rationals(p)));
}

BigRat outcome_probability_exact(const YoungIndex& lambda, const std::vector<BigRat>& p) {
    return BigRat(dim_v(lambda)) * schur_polynomial_exact(lambda, p);
}

double outcome_probability(const YoungIndex& lambda, const SchmidtSpectrum& p) {
    return rat_to_double(outcome_probability_exact(lambda, spectrum_rationals(p)));
}

double YieldDistribution::total_probability() const {
    double s = 0.0;
    for (const auto& e : entries) s += e.probability;
    return s;
}

double YieldDistribution::max_yield() const {
    double m = 0.0;
    for (const auto& e : entries) m = std::max(m, e.yield_bits);
    return m;
}

YieldDistribution yield_distribution(int n, const SchmidtSpectrum& p, const SchurOptions& opts) {
    if (n < 1) throw std::invalid_argument("yield_distribution: n >= 1 required");
    const int d = p.dim();

    bool exact_path;
    switch (opts.path) {
        case SchurOptions::Path::exact: exact_path = true; break;
        case SchurOptions::Path::floating: exact_path = false; break;
        default: exact_path = n <= opts.exact_n_cap; break;
    }
    if (!exact_path && d != 2)
        throw ResourceCapError("yield_distribution: float path only implemented for d = 2; "
                               "raise exact_n_cap to use exact arithmetic");

    auto indices = enumerate_young_indices(n, d);
    if (static_cast<std::int64_t>(indices.size()) > opts.max_entries)
        throw ResourceCapError("yield_distribution: partition count exceeds max_entries cap");

    YieldDistribution dist;
    dist.n = n;
    dist.d = d;
    dist.exact = exact_path;
    dist.entries.resize(indices.size());

    factorial(static_cast<unsigned>(n + d));  // warm the cache before going parallel

    if (exact_path) {
        const ExactContext ctx(spectrum_rationals(p), n);
        auto& entries = dist.entries;
        std::atomic<bool> negative{false};  // exceptions must not cross the parallel region
        for_each_index(static_cast<std::int64_t>(indices.size()), opts.exec, [&](std::int64_t i) {
            YieldEntry e;
            e.index = indices[static_cast<std::size_t>(i)];
            e.dim_v = dim_v(e.index);
            e.yield_bits = log2_bigint(e.dim_v) / n;
            BigRat a = BigRat(e.dim_v) * ctx.schur(e.index);
            if (a < 0) negative.store(true);
            e.probability = rat_to_double(a);
            e.log2_probability =
                (a <= 0) ? -std::numeric_limits<double>::infinity() : log2_bigrat(a);
            e.exact_probability = std::move(a);
            entries[static_cast<std::size_t>(i)] = std::move(e);
        });
        if (negative.load())
            throw InvariantError("yield_distribution: negative outcome probability");
    } else {
        const double p1 = p.probs()[0], p2 = p.probs()[1];
        auto& entries = dist.entries;
        for_each_index(static_cast<std::int64_t>(indices.size()), opts.exec, [&](std::int64_t i) {
            YieldEntry e;
            e.index = indices[static_cast<std::size_t>(i)];
            const int k = e.index.parts[1];
            e.dim_v = dim_v(e.index);
            e.yield_bits = log2_bigint(e.dim_v) / n;
            if (p2 == 0.0) {
                e.log2_probability = (k == 0) ? 0.0 : -std::numeric_limits<double>::infinity();
            } else {
                e.log2_probability = log2_bigint(e.dim_v) + log2_schur_qubit(n, k, p1, p2);
            }
            e.probability = std::exp2(e.log2_probability);
            entries[static_cast<std::size_t>(i)] = std::move(e);
        });
    }
    return dist;
}

double pairwise_divergence(int n, const SchmidtSpectrum& a, const SchmidtSpectrum& b,
                           const SchurOptions& opts) {
    if (!a.strictly_positive() || !b.strictly_positive())
        throw std::invalid_argument("pairwise_divergence: spectra must be strictly positive");
    if (a.dim() != b.dim()) throw std::invalid_argument("pairwise_divergence: dimension mismatch");
    const auto qa = yield_distribution(n, a, opts);
    const auto qb = yield_distribution(n, b, opts);
    double kl = 0.0;
    for (std::size_t i = 0; i < qa.entries.size(); ++i) {
        const double w = qa.entries[i].probability;
        if (w == 0.0) continue;
        if (!std::isfinite(qb.entries[i].log2_probability))
            return std::numeric_limits<double>::infinity();
        kl += w * (qa.entries[i].log2_probability - qb.entries[i].log2_probability);
    }
    return kl;
}

}  // namespace uec
