#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uec/parallel.hpp"
#include "uec/partitions.hpp"
#include "uec/spectrum.hpp"

namespace uec {

// Exact Schur polynomial evaluation. The bialternant route divides by the
// Vandermonde and therefore requires pairwise-distinct entries; the
// Jacobi-Trudi route (determinant in complete homogeneous polynomials) is
// division-free and handles repeated entries.
BigRat schur_bialternant(const YoungIndex& lambda, const std::vector<BigRat>& p);
BigRat schur_jacobi_trudi(const YoungIndex& lambda, const std::vector<BigRat>& p);

// Dispatches between the two routes; accepts entries in any order.
BigRat schur_polynomial_exact(const YoungIndex& lambda, const std::vector<BigRat>& p);

// Double-precision front end (rationalizes float spectra).
double schur_polynomial(const YoungIndex& lambda, const SchmidtSpectrum& p);

// a_lambda = dim_v(lambda) * s_lambda(p).
BigRat outcome_probability_exact(const YoungIndex& lambda, const std::vector<BigRat>& p);
double outcome_probability(const YoungIndex& lambda, const SchmidtSpectrum& p);

struct YieldEntry {
    YoungIndex index;
    BigInt dim_v;
    double yield_bits = 0.0;        // log2(dim_v)/n, in [0, log2 d]
    double probability = 0.0;       // may underflow to 0 in extreme tails
    double log2_probability = 0.0;  // -inf when the outcome has measure zero
    std::optional<BigRat> exact_probability;
};

struct YieldDistribution {
    int n = 0;
    int d = 0;
    bool exact = false;  // exact_probability filled on every entry
    std::vector<YieldEntry> entries;  // canonical (lexicographic descending) order

    double total_probability() const;
    double max_yield() const;
};

struct SchurOptions {
    std::int64_t max_entries = 2'000'000;  // partition-count resource cap
    int exact_n_cap = 600;                 // beyond this, d=2 switches to the float path
    Exec exec = Exec::parallel;
    enum class Path { automatic, exact, floating } path = Path::automatic;
};

// The full outcome law of the concentration measurement on n copies.
YieldDistribution yield_distribution(int n, const SchmidtSpectrum& p,
                                     const SchurOptions& opts = {});

// KL divergence D(Q_a^n || Q_b^n) between two outcome laws, in bits.
double pairwise_divergence(int n, const SchmidtSpectrum& a, const SchmidtSpectrum& b,
                           const SchurOptions& opts = {});

}  // namespace uec
