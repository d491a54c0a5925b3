#include "uec/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace uec {

bool YoungIndex::valid() const {
    if (parts.empty()) return false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) return false;
        if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

std::string YoungIndex::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    os << ')';
    return os.str();
}

std::vector<int> staircase_delta(int d) {
    std::vector<int> delta(d);
    for (int i = 0; i < d; ++i) delta[i] = d - 1 - i;
    return delta;
}

namespace {

void enumerate_rec(int remaining, int maxPart, int depth, int d, std::vector<int>& cur,
                   std::vector<YoungIndex>& out) {
    if (depth == d) {
        if (remaining == 0) out.emplace_back(cur);
        return;
    }
    const int slots = d - depth;
    // Largest feasible value first gives lexicographic descending order.
    int hi = std::min(maxPart, remaining);
    // Remaining slots must be able to absorb the rest: v*slots >= remaining.
    int lo = (remaining + slots - 1) / slots;
    for (int v = hi; v >= lo; --v) {
        cur[depth] = v;
        enumerate_rec(remaining - v, v, depth + 1, d, cur, out);
    }
}

}  // namespace

std::vector<YoungIndex> enumerate_young_indices(int n, int d) {
    if (n < 0 || d < 1) throw std::invalid_argument("enumerate_young_indices: need n >= 0, d >= 1");
    std::vector<YoungIndex> out;
    std::vector<int> cur(d, 0);
    enumerate_rec(n, n, 0, d, cur, out);
    if (n == 0) out.assign(1, YoungIndex(std::vector<int>(d, 0)));
    return out;
}

BigInt dim_v_determinant(const YoungIndex& lambda) {
    if (!lambda.valid()) throw std::invalid_argument("dim_v_determinant: invalid Young index");
    const int d = lambda.d();
    if (d > 8) throw std::invalid_argument("dim_v_determinant: d > 8, use dim_v_product");
    const int n = lambda.n();
    const auto delta = staircase_delta(d);

    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    BigInt total = 0;
    int sign = 1;
    // next_permutation walks lexicographically; track the parity directly.
    std::vector<int> p = perm;
    do {
        // parity of p
        int inversions = 0;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                if (p[i] > p[j]) ++inversions;
        sign = (inversions % 2 == 0) ? 1 : -1;

        BigInt denom = 1;
        bool zero = false;
        for (int i = 0; i < d; ++i) {
            const int k = lambda.parts[i] + delta[i] - delta[p[i]];
            if (k < 0) {
                zero = true;  // 1/k! = 0 for k < 0
                break;
            }
            denom *= factorial(static_cast<unsigned>(k));
        }
        if (!zero) total += sign * (factorial(static_cast<unsigned>(n)) / denom);
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

BigInt dim_v_product(const YoungIndex& lambda) {
    if (!lambda.valid()) throw std::invalid_argument("dim_v_product: invalid Young index");
    const int d = lambda.d();
    const int n = lambda.n();
    const auto delta = staircase_delta(d);

    BigInt numer = factorial(static_cast<unsigned>(n));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            numer *= BigInt(lambda.parts[i] - lambda.parts[j] + j - i);
    BigInt denom = 1;
    for (int i = 0; i < d; ++i) denom *= factorial(static_cast<unsigned>(lambda.parts[i] + delta[i]));
    BigInt result = numer / denom;
    return result < 0 ? BigInt(-result) : result;
}

BigInt dim_v(const YoungIndex& lambda) { return dim_v_product(lambda); }

BigInt dim_u(const YoungIndex& lambda) {
    if (!lambda.valid()) throw std::invalid_argument("dim_u: invalid Young index");
    const int d = lambda.d();
    const auto delta = staircase_delta(d);
    BigInt numer = 1, denom = 1;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            numer *= BigInt(lambda.parts[i] + delta[i] - lambda.parts[j] - delta[j]);
            denom *= BigInt(delta[i] - delta[j]);
        }
    }
    return numer / denom;
}

}  // namespace uec
