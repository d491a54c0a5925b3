#pragma once

#include <string>
#include <vector>

#include "uec/bigint.hpp"

namespace uec {

// Young index: a partition of n into at most d parts, kept with
// explicit trailing zeros so d (the local dimension) is part of the value.
struct YoungIndex {
    std::vector<int> parts;

    YoungIndex() = default;
    explicit YoungIndex(std::vector<int> p) : parts(std::move(p)) {}

    int d() const { return static_cast<int>(parts.size()); }
    int n() const {
        int s = 0;
        for (int v : parts) s += v;
        return s;
    }
    bool valid() const;
    std::string str() const;  // "(2,1,0)"

    bool operator==(const YoungIndex& other) const { return parts == other.parts; }
};

// The staircase (d-1, d-2, ..., 0).
std::vector<int> staircase_delta(int d);

// All partitions of n into at most d parts, lexicographically descending.
// n = 0 yields the single all-zero partition.
std::vector<YoungIndex> enumerate_young_indices(int n, int d);

// Dimension of the symmetric-group irrep of shape lambda (the number of
// standard Young tableaux), via the signed-factorial sum over S_d.
// The 1/k! := 0 convention for k < 0 drops out-of-range terms.
// Rejects d > 8 (d! terms); use dim_v_product beyond that.
BigInt dim_v_determinant(const YoungIndex& lambda);

// Same dimension via the product formula
//   n! * prod_{i<j}(l_i - l_j) / prod_i l_i!,   l = lambda + delta.
BigInt dim_v_product(const YoungIndex& lambda);

// Dispatches to the product formula; kept as the canonical entry point.
BigInt dim_v(const YoungIndex& lambda);

// Dimension of the SU(d) irrep of highest weight lambda (Weyl formula),
//   prod_{i<j} (l_i - l_j) / (j - i).
BigInt dim_u(const YoungIndex& lambda);

}  // namespace uec
