#include "uec/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

#include "uec/rates.hpp"

namespace uec {

namespace {

std::vector<int> strip_zeros(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

int weight(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

// beta numbers (first-column hook lengths) of a partition with L rows
std::vector<int> beta_numbers(const std::vector<int>& lambda, int rows) {
    std::vector<int> beta(rows, 0);
    for (int i = 0; i < rows; ++i)
        beta[i] = (i < static_cast<int>(lambda.size()) ? lambda[i] : 0) + (rows - 1 - i);
    return beta;
}

std::vector<int> partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    const int rows = static_cast<int>(beta.size());
    std::vector<int> lambda(rows);
    for (int i = 0; i < rows; ++i) lambda[i] = beta[i] - (rows - 1 - i);
    return strip_zeros(lambda);
}

long long mn_recurse(const std::vector<int>& lambda, const std::vector<int>& mu,
                     std::size_t mu_pos) {
    if (mu_pos == mu.size()) return lambda.empty() ? 1 : 0;

    using Key = std::pair<std::vector<int>, std::pair<std::vector<int>, std::size_t>>;
    static std::map<Key, long long> memo;
    static std::mutex memo_mutex;
    const Key key{lambda, {mu, mu_pos}};
    {
        std::lock_guard lock(memo_mutex);
        const auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    const int m = mu[mu_pos];
    const int rows = static_cast<int>(lambda.size());
    auto beta = beta_numbers(lambda, rows);
    long long total = 0;
    for (int i = 0; i < rows; ++i) {
        const int target = beta[i] - m;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int height = 0;  // strip height = betas jumped over
        for (int j = 0; j < rows; ++j)
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        auto next_beta = beta;
        next_beta[i] = target;
        const long long sub = mn_recurse(partition_from_beta(std::move(next_beta)), mu, mu_pos + 1);
        total += (height % 2 == 0) ? sub : -sub;
    }

    std::lock_guard lock(memo_mutex);
    memo.emplace(key, total);
    return total;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    std::vector<int> type;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<int>());
    return type;
}

void check_caps(int d, int n, const OracleCaps& caps) {
    double dim = 1.0;
    for (int i = 0; i < n; ++i) dim *= d;
    if (dim > caps.max_local_dim)
        throw ResourceCapError("oracle: d^n exceeds max_local_dim cap");
    if (n > caps.max_permutation_n)
        throw ResourceCapError("oracle: n exceeds max_permutation_n cap");
}

int pow_int(int d, int n) {
    int r = 1;
    for (int i = 0; i < n; ++i) r *= d;
    return r;
}

}  // namespace

long long sn_character(const std::vector<int>& lambda, const std::vector<int>& mu) {
    const auto l = strip_zeros(lambda);
    auto m = strip_zeros(mu);
    if (weight(l) != weight(m))
        throw std::invalid_argument("sn_character: lambda and mu must partition the same n");
    std::sort(m.begin(), m.end(), std::greater<int>());
    return mn_recurse(l, m, 0);
}

BigInt conjugacy_class_size(const std::vector<int>& mu) {
    const auto m = strip_zeros(mu);
    const int n = weight(m);
    BigInt z(1);
    std::map<int, int> mult;
    for (int part : m) ++mult[part];
    for (const auto& [part, count] : mult) {
        for (int i = 0; i < count; ++i) z *= part;
        z *= factorial(static_cast<unsigned>(count));
    }
    return factorial(static_cast<unsigned>(n)) / z;
}

Eigen::MatrixXd isotypic_projector(const YoungIndex& lambda, const OracleCaps& caps) {
    const int d = lambda.d();
    const int n = lambda.n();
    check_caps(d, n, caps);
    const int dim = pow_int(d, n);

    const double scale =
        rat_to_double(BigRat(dim_v(lambda)) / BigRat(factorial(static_cast<unsigned>(n))));

    Eigen::MatrixXd proj = Eigen::MatrixXd::Zero(dim, dim);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> digits(n);
    do {
        const double coeff =
            scale * static_cast<double>(sn_character(lambda.parts, cycle_type(perm)));
        if (coeff == 0.0) continue;
        for (int a = 0; a < dim; ++a) {
            int rest = a;
            for (int i = n - 1; i >= 0; --i) {
                digits[i] = rest % d;
                rest /= d;
            }
            int b = 0;
            // tensor-factor permutation: digit at slot i moves to slot perm[i]
            std::vector<int> out(n, 0);
            for (int i = 0; i < n; ++i) out[perm[i]] = digits[i];
            for (int i = 0; i < n; ++i) b = b * d + out[i];
            proj(b, a) += coeff;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return proj;
}

DenseBipartiteState build_state(const SchmidtSpectrum& p, int n, const OracleCaps& caps) {
    const int d = p.dim();
    return build_state_rotated(p, n, Eigen::MatrixXcd::Identity(d, d),
                               Eigen::MatrixXcd::Identity(d, d), caps);
}

DenseBipartiteState build_state_rotated(const SchmidtSpectrum& p, int n,
                                        const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                                        const OracleCaps& caps) {
    const int d = p.dim();
    check_caps(d, n, caps);
    if (u.rows() != d || u.cols() != d || v.rows() != d || v.cols() != d)
        throw std::invalid_argument("build_state_rotated: unitary dimension mismatch");
    Eigen::MatrixXcd single = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i) single += std::sqrt(p.probs()[i]) * u.col(i) * v.col(i).transpose();

    const int dim = pow_int(d, n);
    DenseBipartiteState st;
    st.d = d;
    st.n = n;
    st.coeff.resize(dim, dim);
    std::vector<int> da(n), db(n);
    for (int a = 0; a < dim; ++a) {
        int rest = a;
        for (int i = n - 1; i >= 0; --i) {
            da[i] = rest % d;
            rest /= d;
        }
        for (int b = 0; b < dim; ++b) {
            int r2 = b;
            for (int i = n - 1; i >= 0; --i) {
                db[i] = r2 % d;
                r2 /= d;
            }
            std::complex<double> prod(1.0, 0.0);
            for (int i = 0; i < n; ++i) prod *= single(da[i], db[i]);
            st.coeff(a, b) = prod;
        }
    }
    return st;
}

double oracle_outcome_probability(const DenseBipartiteState& state, const YoungIndex& lambda,
                                  const OracleCaps& caps) {
    const Eigen::MatrixXd proj = isotypic_projector(lambda, caps);
    const Eigen::MatrixXcd rho_a = state.coeff * state.coeff.adjoint();
    return (proj.cast<std::complex<double>>() * rho_a).trace().real();
}

double verify_outcome_law(const DenseBipartiteState& state, const SchmidtSpectrum& p,
                          const OracleCaps& caps) {
    double worst = 0.0;
    for (const auto& lambda : enumerate_young_indices(state.n, state.d)) {
        const double traced = oracle_outcome_probability(state, lambda, caps);
        const double formula = outcome_probability(lambda, p);
        worst = std::max(worst, std::abs(traced - formula));
    }
    return worst;
}

ExtractionCheck verify_extracted_entanglement(const DenseBipartiteState& state,
                                              const YoungIndex& lambda, const OracleCaps& caps) {
    const Eigen::MatrixXcd proj = isotypic_projector(lambda, caps).cast<std::complex<double>>();
    const Eigen::MatrixXcd projected = proj * state.coeff * proj.transpose();
    ExtractionCheck check;
    check.probability = projected.squaredNorm();
    check.extracted_bits = log2_bigint(dim_v(lambda));
    if (check.probability <= 0.0)
        throw InvariantError("verify_extracted_entanglement: outcome has zero probability");

    const Eigen::MatrixXcd rho_a = projected * projected.adjoint() / check.probability;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho_a);
    std::vector<double> eigs;
    for (int i = 0; i < solver.eigenvalues().size(); ++i) {
        const double v = solver.eigenvalues()(i);
        if (v > 1e-12) eigs.push_back(v);
    }
    std::sort(eigs.begin(), eigs.end(), std::greater<double>());

    // cluster descending eigenvalues; a gap > 1e-7 starts a new group
    const BigInt dv = dim_v(lambda);
    const auto group_size = dv.convert_to<long long>();
    std::vector<std::pair<double, int>> groups;  // (mean, count)
    double residual = 0.0;
    std::size_t i = 0;
    while (i < eigs.size()) {
        std::size_t j = i + 1;
        while (j < eigs.size() && eigs[j - 1] - eigs[j] <= 1e-7) ++j;
        double mean = 0.0;
        for (std::size_t k = i; k < j; ++k) mean += eigs[k];
        mean /= static_cast<double>(j - i);
        for (std::size_t k = i; k < j; ++k) residual = std::max(residual, std::abs(eigs[k] - mean));
        groups.emplace_back(mean, static_cast<int>(j - i));
        i = j;
    }
    check.group_residual = residual;
    check.u_rank = static_cast<int>(groups.size());
    check.groups_ok = true;
    for (const auto& [mean, count] : groups)
        if (count % group_size != 0) check.groups_ok = false;

    // entanglement entropy must split as H(U-sector) + log2 dim V
    double h_all = 0.0;
    for (double v : eigs) h_all -= v * std::log2(v);
    double h_u = 0.0;
    const double dvd = static_cast<double>(group_size);
    for (const auto& [mean, count] : groups) {
        const double u_eig = mean * dvd;
        const double copies = static_cast<double>(count) / dvd;
        if (u_eig > 0.0) h_u -= copies * u_eig * std::log2(u_eig);
    }
    check.entropy_residual = std::abs(h_all - (h_u + check.extracted_bits));
    return check;
}

Eigen::MatrixXcd random_unitary(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        const std::complex<double> phase = r(j, j) / std::abs(r(j, j));
        q.col(j) *= std::conj(phase);
    }
    return q;
}

double verify_projector_family(int d, int n, const OracleCaps& caps) {
    check_caps(d, n, caps);
    const int dim = pow_int(d, n);
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(dim, dim);
    double worst = 0.0;
    for (const auto& lambda : enumerate_young_indices(n, d)) {
        const Eigen::MatrixXd proj = isotypic_projector(lambda, caps);
        sum += proj;
        worst = std::max(worst, (proj * proj - proj).cwiseAbs().maxCoeff());
        worst = std::max(worst, (proj - proj.transpose()).cwiseAbs().maxCoeff());
        const double expected_trace = rat_to_double(BigRat(dim_u(lambda) * dim_v(lambda)));
        worst = std::max(worst, std::abs(proj.trace() - expected_trace));
    }
    worst = std::max(worst, (sum - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff());
    return worst;
}

}  // namespace uec
