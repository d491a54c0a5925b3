#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "uec/rates.hpp"
#include "uec/schur.hpp"

namespace uec {

// Pr{ yield <= R } under the outcome law (both threshold sums include x = R).
double failure_probability(const YieldDistribution& dist, double R);

// Pr{ yield >= R }.
double strong_converse_probability(const YieldDistribution& dist, double R);

// F(R) = E[ min{1, 2^{-n(R-X)}} ]; 1 - F is exposed separately because the
// complement is the exponentially small quantity at R < H(p).
double total_fidelity(const YieldDistribution& dist, double R);
double one_minus_total_fidelity(const YieldDistribution& dist, double R);

// E[X] in bits per copy.
double average_yield(const YieldDistribution& dist);

// Expected per-copy log-multinomial coefficient of the observed type:
// the exact average yield of concentration by typical-type projection
// (the known-basis protocol this one is benchmarked against).
double bbps_average_yield_exact(int n, const SchmidtSpectrum& p);

struct GapResult {
    double gap_bits = 0.0;           // bbps - average_yield(C*) at this n
    double analytic_constant = 0.0;  // predicted n * gap limit
};
// Requires strictly positive, pairwise distinct spectrum entries.
GapResult cstar_bbps_gap(int n, const SchmidtSpectrum& p, const SchurOptions& opts = {});

// Expected yield (total bits, not per copy) of the optimal known-state
// single-shot concentration: sum over distinct Schmidt values
// (v_i - v_{i+1}) T_i log2 T_i with T_i the count of values >= v_i.
// Entries: (value, multiplicity), sorted by value descending.
double hardy_average_yield(const std::vector<std::pair<double, BigInt>>& schmidt_values);

// Exact per-copy evaluation for the n-fold qubit state (binomial Schmidt
// blocks), in log space so it scales to n in the thousands.
double hardy_qubit_average_yield(int n, const SchmidtSpectrum& p);

// Finite-size expansion of the same quantity,
//   h(p) - log2(n)/(2n) + c/n,
// with the geometric-series ratio taken as (smaller/larger) so the series
// converges; validated against hardy_qubit_average_yield.
double hardy_qubit_expansion(int n, const SchmidtSpectrum& p);

// Upper bound on any measure-then-concentrate scheme that spends c_n of
// the n copies on estimation: ((n-c)/n) H(p) + A log2(n-c)/(n-c).
double estimation_based_bound(int n, double c_n, const SchmidtSpectrum& p);

// Deterministic seeded sampling from the outcome law (inverse CDF over
// fixed streams, so results are identical for any thread count).
struct SampleCounts {
    std::vector<std::int64_t> counts;  // parallel to dist.entries
    std::int64_t total = 0;
    std::uint64_t seed = 0;
};
SampleCounts sample_yields(const YieldDistribution& dist, std::int64_t count, std::uint64_t seed,
                           Exec exec = Exec::parallel);

}  // namespace uec
