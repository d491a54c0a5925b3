#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "uec/schur.hpp"

namespace uec {

// Dense ground truth at tiny n: n-fold bipartite states as d^n x d^n
// coefficient matrices, permutation-isotypic projectors from symmetric
// group characters, and direct verification of the measurement law and
// the product structure of the projected states.
struct OracleCaps {
    int max_local_dim = 64;     // refuse when d^n exceeds this
    int max_permutation_n = 8;  // n! permutations enumerated for projectors
};

// Irreducible character chi_lambda(mu) of S_n. Both arguments are
// partitions of the same n (trailing zeros ignored); mu is a cycle type.
// Computed by border-strip (Murnaghan-Nakayama) recursion over first-column
// hook lengths, memoized; thread-safe.
long long sn_character(const std::vector<int>& lambda, const std::vector<int>& mu);

// Number of permutations in S_n with cycle type mu: n! / prod(i^{k_i} k_i!).
BigInt conjugacy_class_size(const std::vector<int>& mu);

// Projector onto the lambda-isotypic component of (C^d)^{tensor n}.
Eigen::MatrixXd isotypic_projector(const YoungIndex& lambda, const OracleCaps& caps = {});

struct DenseBipartiteState {
    int d = 0;
    int n = 0;
    Eigen::MatrixXcd coeff;  // |phi> = sum_{a,b} coeff(a,b) |a>_A |b>_B, unit Frobenius norm
};

// |phi>^{tensor n} with phi = sum_i sqrt(p_i) |ii>, in the computational
// Schmidt basis, optionally conjugated by local unitaries U, V per copy.
DenseBipartiteState build_state(const SchmidtSpectrum& p, int n, const OracleCaps& caps = {});
DenseBipartiteState build_state_rotated(const SchmidtSpectrum& p, int n,
                                        const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                                        const OracleCaps& caps = {});

// Outcome probability from the dense trace Tr[P_lambda rho_A^{tensor n}].
double oracle_outcome_probability(const DenseBipartiteState& state, const YoungIndex& lambda,
                                  const OracleCaps& caps = {});

// Max |formula - trace| over all outcomes.
double verify_outcome_law(const DenseBipartiteState& state, const SchmidtSpectrum& p,
                          const OracleCaps& caps = {});

// Project with P_lambda (x) P_lambda, renormalize, and test the reduced
// state on A for the expected structure: eigenvalue groups of multiplicity
// dim V_lambda, and total entanglement = H(U-sector spectrum) + log2 dim V.
struct ExtractionCheck {
    double probability = 0.0;      // measurement probability of this outcome
    double group_residual = 0.0;   // worst within-group eigenvalue spread
    double entropy_residual = 0.0;
    bool groups_ok = false;        // every group size is a multiple of dim V
    int u_rank = 0;                // number of distinct eigenvalue groups found
    double extracted_bits = 0.0;   // log2 dim V_lambda
};
ExtractionCheck verify_extracted_entanglement(const DenseBipartiteState& state,
                                              const YoungIndex& lambda,
                                              const OracleCaps& caps = {});

// Haar-ish random unitary (QR of a seeded complex Gaussian matrix).
Eigen::MatrixXcd random_unitary(int d, std::uint64_t seed);

// Projector sanity over all lambda at (d, n): completeness, idempotence,
// self-adjointness, trace = dim U * dim V. Returns the worst residual.
double verify_projector_family(int d, int n, const OracleCaps& caps = {});

}  // namespace uec
