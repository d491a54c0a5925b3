// Acceptance suite: every release-gating check in one binary, one
// PASS/FAIL line each. Exit code 0 only if all criteria hold.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "uec/estimation.hpp"
#include "uec/oracle.hpp"
#include "uec/postproc.hpp"
#include "uec/protocols.hpp"
#include "uec/rates.hpp"
#include "uec/schur.hpp"

using namespace uec;

namespace {

int g_failures = 0;

class Criterion {
  public:
    Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {
        start_ = std::chrono::steady_clock::now();
    }
    void require(bool ok, const std::string& what) {
        if (!ok) problems_.push_back(what);
    }
    void note(const std::string& text) { notes_.push_back(text); }
    ~Criterion() {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        const bool ok = problems_.empty();
        if (!ok) ++g_failures;
        std::printf("[%s] criterion %2d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", id_, title_.c_str(),
                    secs);
        for (const auto& n : notes_) std::printf("         %s\n", n.c_str());
        for (const auto& p : problems_) std::printf("         !! %s\n", p.c_str());
    }

  private:
    int id_;
    std::string title_;
    std::vector<std::string> problems_;
    std::vector<std::string> notes_;
    std::chrono::steady_clock::time_point start_;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

void criterion_1_dimensions() {
    Criterion c(1, "dimension identities and formula agreement");
    for (int d = 2; d <= 4; ++d) {
        for (int n = 1; n <= 12; ++n) {
            BigInt sum = 0;
            for (const auto& lambda : enumerate_young_indices(n, d))
                sum += dim_u(lambda) * dim_v(lambda);
            BigInt expect = 1;
            for (int i = 0; i < n; ++i) expect *= d;
            c.require(sum == expect,
                      "sum dim_u*dim_v != d^n at d=" + std::to_string(d) +
                          " n=" + std::to_string(n));
        }
    }
    long long shapes = 0;
    for (int d = 2; d <= 5; ++d)
        for (int n = 1; n <= 20; ++n)
            for (const auto& lambda : enumerate_young_indices(n, d)) {
                ++shapes;
                if (dim_v_determinant(lambda) != dim_v_product(lambda))
                    c.require(false, "dim V formulas disagree at " + lambda.str());
            }
    c.note("formula agreement over " + std::to_string(shapes) + " shapes, d<=5, n<=20");
}

const std::vector<std::string> kSpectraD2{"1/2,1/2", "3/4,1/4", "0.9,0.1", "2/3,1/3",
                                          "0.55,0.45"};
const std::vector<std::string> kSpectraD3{"1/2,1/3,1/6", "1/3,1/3,1/3", "0.5,0.3,0.2",
                                          "0.7,0.2,0.1", "3/7,3/7,1/7"};

void criterion_2_oracle_equivalence() {
    Criterion c(2, "formula vs dense-trace outcome probabilities (<= 1e-10)");
    double worst = 0.0;
    auto sweep = [&](int d, const std::vector<int>& ns, const std::vector<std::string>& specs) {
        for (const auto& text : specs) {
            const auto p = SchmidtSpectrum::parse(text);
            for (int n : ns) {
                const double dev = verify_outcome_law(build_state(p, n), p);
                worst = std::max(worst, dev);
                c.require(dev <= 1e-10,
                          "deviation " + fmt("%.3e", dev) + " at d=" + std::to_string(d) +
                              " n=" + std::to_string(n) + " p=" + text);
            }
        }
    };
    sweep(2, {2, 3, 4, 5}, kSpectraD2);
    sweep(3, {2, 3}, kSpectraD3);
    c.note(fmt("max deviation %.3e over 26 grid points x 5 spectra", worst));
}

void criterion_3_extraction_structure() {
    Criterion c(3, "projected states: dim-V eigenvalue groups and V-sector entanglement");
    double worst_group = 0.0, worst_entropy = 0.0;
    int checked = 0;
    auto sweep = [&](int d, const std::vector<int>& ns, const std::vector<std::string>& specs) {
        for (const auto& text : specs) {
            const auto p = SchmidtSpectrum::parse(text);
            for (int n : ns) {
                const auto state = build_state(p, n);
                for (const auto& lambda : enumerate_young_indices(n, d)) {
                    if (outcome_probability(lambda, p) <= 1e-6) continue;
                    const auto chk = verify_extracted_entanglement(state, lambda);
                    ++checked;
                    worst_group = std::max(worst_group, chk.group_residual);
                    worst_entropy = std::max(worst_entropy, chk.entropy_residual);
                    c.require(chk.groups_ok, "group multiplicity broken at " + lambda.str() +
                                                 " p=" + text);
                    c.require(chk.group_residual <= 1e-8,
                              "group residual " + fmt("%.3e", chk.group_residual) + " at " +
                                  lambda.str() + " p=" + text);
                    c.require(chk.entropy_residual <= 1e-8,
                              "entropy split residual " + fmt("%.3e", chk.entropy_residual) +
                                  " at " + lambda.str() + " p=" + text);
                }
            }
        }
    };
    sweep(2, {2, 3, 4, 5}, kSpectraD2);
    sweep(3, {2, 3}, kSpectraD3);
    c.note(fmt("%d sectors checked; worst group %.2e, worst entropy %.2e",
               static_cast<double>(checked), worst_group, worst_entropy));
}

void criterion_4_entropy_bound() {
    Criterion c(4, "log-dimension vs type entropy bound, exhaustive");
    const auto s2 = dimension_entropy_bound_sweep(2, 200);
    c.require(s2.all_hold, "bound violated for d=2 at " + s2.worst.str());
    const auto s3 = dimension_entropy_bound_sweep(3, 60);
    c.require(s3.all_hold, "bound violated for d=3 at " + s3.worst.str());
    c.note(fmt("d=2: %.0f shapes, min margin %.4f", static_cast<double>(s2.checked),
               s2.min_margin));
    c.note(fmt("d=3: %.0f shapes, min margin %.4f", static_cast<double>(s3.checked),
               s3.min_margin));
}

// distance-to-target must not grow by more than the lattice slack, must
// shrink overall, and must end below the spec tolerance
void check_sequence(Criterion& c, const std::string& name, const std::vector<double>& seq,
                    double target, double final_gap_tol) {
    const double slack = 0.01;
    double first_finite = std::numeric_limits<double>::infinity();
    double prev = std::numeric_limits<double>::infinity();
    for (double v : seq) {
        const double err = std::isfinite(v) ? std::abs(v - target)
                                            : std::numeric_limits<double>::infinity();
        if (std::isfinite(err) && !std::isfinite(first_finite)) first_finite = err;
        c.require(err <= prev + slack,
                  name + ": distance to target grew beyond slack (" + fmt("%.4f", err) + ")");
        prev = err;
    }
    c.require(std::isfinite(prev), name + ": sequence never became finite");
    c.require(prev <= first_finite + 1e-15, name + ": no net approach toward the target");
    c.require(prev < final_gap_tol,
              name + ": final gap " + fmt("%.4f >= %.2f", prev, final_gap_tol));
    std::ostringstream os;
    os << name << " [";
    for (std::size_t i = 0; i < seq.size(); ++i)
        os << (i ? " " : "") << fmt("%.4f", seq[i]);
    os << "] -> " << fmt("%.4f", target);
    c.note(os.str());
}

void criterion_5_exponents() {
    Criterion c(5, "failure/strong-converse/fidelity exponents approach the rate function");
    const auto p = SchmidtSpectrum::parse("3/4,1/4");
    const std::vector<int> ladder{50, 100, 200, 400};
    std::vector<YieldDistribution> dists;
    for (int n : ladder) dists.push_back(yield_distribution(n, p));

    for (double R : {0.6, 0.95}) {
        const double target = rate_function(p, R);
        const bool below_entropy = R < shannon_entropy(p);
        std::vector<double> fail_seq, conv_seq, fid_seq;
        for (std::size_t i = 0; i < ladder.size(); ++i) {
            const int n = ladder[i];
            auto expo = [n](double v) {
                return v > 0.0 ? -std::log2(v) / n : std::numeric_limits<double>::infinity();
            };
            fail_seq.push_back(expo(failure_probability(dists[i], R)));
            conv_seq.push_back(expo(strong_converse_probability(dists[i], R)));
            fid_seq.push_back(expo(one_minus_total_fidelity(dists[i], R)));
        }
        // each sequence converges to D(R||p) on the branch where its
        // probability is exponentially small: failure and 1-F for R below
        // the entropy, strong converse above it
        if (below_entropy) {
            check_sequence(c, fmt("failure@R=%.2f", R), fail_seq, target, 0.08);
            check_sequence(c, fmt("1-F@R=%.2f", R), fid_seq, target, 0.08);
        } else {
            check_sequence(c, fmt("converse@R=%.2f", R), conv_seq, target, 0.08);
        }
    }
}

void criterion_6_bbps_expansion() {
    Criterion c(6, "finite-size expansion of the type-protocol yield");
    const auto p = SchmidtSpectrum::parse("3/4,1/4");
    const auto coeff = expansion_coefficients_bbps(p);
    const double h = shannon_entropy(p);
    double prev = std::numeric_limits<double>::infinity();
    double last = 0.0;
    std::ostringstream os;
    for (int n : {200, 500, 1000, 2000}) {
        const double exact = bbps_average_yield_exact(n, p);
        const double expansion = h + coeff.log_coeff * std::log2(n) / n + coeff.const_coeff / n;
        last = n * std::abs(exact - expansion);
        os << fmt(" %.5f", last);
        c.require(last < prev, "residual*n increased at n=" + std::to_string(n));
        prev = last;
    }
    c.require(last < 0.05, fmt("final residual*n %.4f >= 0.05", last));
    c.note("residual*n over {200,500,1000,2000}:" + os.str());
}

void criterion_7_gap() {
    Criterion c(7, "universal-vs-known-basis yield gap: n*gap stabilizes at the constant");
    const auto p = SchmidtSpectrum::parse("3/4,1/4");
    std::vector<double> ngaps;
    double analytic = 0.0;
    for (int n : {500, 1000, 2000}) {
        const auto g = cstar_bbps_gap(n, p);
        analytic = g.analytic_constant;
        c.require(g.gap_bits > 0.0, "gap not positive at n=" + std::to_string(n));
        ngaps.push_back(n * g.gap_bits);
    }
    const double lo = *std::min_element(ngaps.begin(), ngaps.end());
    const double hi = *std::max_element(ngaps.begin(), ngaps.end());
    c.require((hi - lo) / hi < 0.10, fmt("relative spread %.3f >= 0.10", (hi - lo) / hi));
    const double rel = std::abs(ngaps.back() - analytic) / analytic;
    c.require(rel < 0.05, fmt("n*gap %.4f vs analytic %.4f beyond 5%%", ngaps.back(), analytic));
    c.note(fmt("n*gap {%.4f %.4f %.4f}", ngaps[0], ngaps[1], ngaps[2]) +
           fmt(", analytic %.4f", analytic));
}

void criterion_8_hardy() {
    Criterion c(8, "known-state optimum: exact single-copy value and n-copy expansion");
    const auto p = SchmidtSpectrum::parse("3/4,1/4");
    const double single = hardy_qubit_average_yield(1, p);
    c.require(std::abs(single - 0.5) < 1e-12, fmt("single-copy value %.15f != 1/2", single));
    double prev = std::numeric_limits<double>::infinity();
    std::ostringstream os;
    for (int n : {100, 300, 1000}) {
        const double residual =
            n * std::abs(hardy_qubit_average_yield(n, p) - hardy_qubit_expansion(n, p));
        os << fmt(" %.5f", residual);
        c.require(residual < prev, "residual*n increased at n=" + std::to_string(n));
        prev = residual;
    }
    c.note("residual*n over {100,300,1000}:" + os.str());
}

void criterion_9_threshold() {
    Criterion c(9, "postprocessing threshold: identity iff n >= n0 = 9.97/log2 d");
    const auto p = SchmidtSpectrum::parse("3/4,1/4");
    const YieldFunctional f = YieldFunctional::linear(1.0);
    const double n0 = -std::log2(1.0 - 1.0 / 1.001);
    c.note(fmt("threshold -log2(1-1/lambda) = %.4f", n0));

    int non_identity_below = 0;
    for (int n = 2; n <= 9; ++n) {
        const auto law = support_law(yield_distribution(n, p));
        if (!optimize_weighted_sum(law, f, 1.001).identity) ++non_identity_below;
    }
    c.require(non_identity_below > 0, "no non-identity optimum found below the threshold");
    c.note(fmt("non-identity optima at %.0f of 8 sizes below n0", double(non_identity_below)));

    for (int n = 10; n <= 30; ++n) {
        const auto law = support_law(yield_distribution(n, p));
        c.require(optimize_weighted_sum(law, f, 1.001).identity,
                  "non-identity optimum above the threshold at n=" + std::to_string(n));
    }
    for (int n = 1; n <= 12; ++n) {
        const auto law = support_law(yield_distribution(n, p));
        BigInt dn = 1;
        for (int i = 0; i < n; ++i) dn *= 2;
        const BigRat lambda = BigRat(dn) / BigRat(dn - 1);
        c.require(optimize_weighted_sum(law, f, lambda).identity,
                  "lambda=1/(1-d^-n) broke identity at n=" + std::to_string(n));
    }
}

void criterion_10_lagrangian_bound() {
    Criterion c(10, "Lagrangian bound: random constrained kernels never beat identity + lambda r");
    const auto p = SchmidtSpectrum::parse("3/4,1/4");
    const int n = 20;
    const auto law = support_law(yield_distribution(n, p));
    const YieldFunctional f = YieldFunctional::linear(1.0);
    const double identity_value = generalized_yield(law, f);
    const double lambda = 1.001;
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const std::size_t m = law.support.size();
    int tested = 0;
    for (double r_n : {1e-3, 1e-2}) {
        for (int trial = 0; trial < 50; ++trial) {
            TransitionKernel k = TransitionKernel::identity(law.n, law.support);
            for (std::size_t i = 0; i < m; ++i) {
                double off = 0.0;
                for (std::size_t j = i + 1; j < m; ++j) {
                    const double q = unif(rng) < 0.3 ? unif(rng) : 0.0;
                    k.rows[i][j] = q;
                    off += q;
                }
                if (off > 0.0)
                    for (std::size_t j = i + 1; j < m; ++j) k.rows[i][j] *= 0.9 / std::max(off, 0.9);
                off = 0.0;
                for (std::size_t j = i + 1; j < m; ++j) off += k.rows[i][j];
                k.rows[i][i] = 1.0 - off;
            }
            auto push = apply_kernel(law, k);
            if (push.distortion.average > r_n) {  // scale into the budget
                const double scale = (0.2 + 0.8 * unif(rng)) * r_n / push.distortion.average;
                for (std::size_t i = 0; i < m; ++i) {
                    double off = 0.0;
                    for (std::size_t j = i + 1; j < m; ++j) {
                        k.rows[i][j] *= scale;
                        off += k.rows[i][j];
                    }
                    k.rows[i][i] = 1.0 - off;
                }
                push = apply_kernel(law, k);
            }
            ++tested;
            const double achieved = generalized_yield(push.claimed, f);
            c.require(push.distortion.average <= r_n + 1e-15, "kernel left the budget");
            c.require(achieved <= identity_value + lambda * r_n + 1e-12,
                      fmt("bound broken: %.12f > identity %.12f + lambda*r", achieved,
                          identity_value));
        }
    }
    c.note(fmt("%d random kernels across r in {1e-3,1e-2} at n=%d", double(tested), double(n)));
}

void criterion_11_estimation() {
    Criterion c(11, "entropy estimation: n*MSE near the variance floor, tail exponents on target");
    const auto p = SchmidtSpectrum::parse("3/4,1/4");
    const auto mse = estimator_mse(p, 300);
    c.note(fmt("n*MSE type %.4f, primary %.4f, floor %.4f", mse.n_mse_type, mse.n_mse_primary,
               mse.cr_bound));
    c.require(std::abs(mse.n_mse_type - mse.cr_bound) <= 0.10 * mse.cr_bound,
              fmt("type estimator off the floor by %.1f%%",
                  100.0 * std::abs(mse.n_mse_type - mse.cr_bound) / mse.cr_bound));
    c.require(std::abs(mse.n_mse_primary - mse.cr_bound) <= 0.15 * mse.cr_bound,
              fmt("log-rank estimator off the floor by %.1f%% (> 15%%)",
                  100.0 * std::abs(mse.n_mse_primary - mse.cr_bound) / mse.cr_bound));

    const double delta = 0.1;
    const auto tails = estimator_error_exponent(p, delta, {200});
    c.require(std::isfinite(tails.lower_exponent[0]) &&
                  std::abs(tails.lower_exponent[0] - tails.lower_target) < 0.08,
              fmt("lower tail exponent %.4f vs target %.4f", tails.lower_exponent[0],
                  tails.lower_target));
    c.require(std::isfinite(tails.upper_exponent[0]) &&
                  std::abs(tails.upper_exponent[0] - tails.upper_target) < 0.08,
              fmt("upper tail exponent %.4f vs target %.4f", tails.upper_exponent[0],
                  tails.upper_target));
    c.note(fmt("delta=0.1, n=200: lower %.4f->%.4f", tails.lower_exponent[0],
               tails.lower_target) +
           fmt(", upper %.4f->%.4f", tails.upper_exponent[0], tails.upper_target));
}

void criterion_12_divergence() {
    Criterion c(12, "per-copy divergence of outcome laws within 5/n of D(q||p)");
    const auto p = SchmidtSpectrum::parse("3/4,1/4");
    const auto q = SchmidtSpectrum::parse("3/5,2/5");
    const double target = kl_divergence(q.probs(), p.probs());
    for (int n : {20, 40, 80}) {
        const double per_copy = pairwise_divergence(n, q, p) / n;
        const double gap = std::abs(per_copy - target);
        c.require(gap <= 5.0 / n, fmt("|(1/n)KL - D| = %.4f > 5/n at n=%.0f", gap, double(n)));
        c.note(fmt("n=%.0f: (1/n)KL = %.5f, D = %.5f", double(n), per_copy, target));
    }
}

}  // namespace

int main() {
    criterion_1_dimensions();
    criterion_2_oracle_equivalence();
    criterion_3_extraction_structure();
    criterion_4_entropy_bound();
    criterion_5_exponents();
    criterion_6_bbps_expansion();
    criterion_7_gap();
    criterion_8_hardy();
    criterion_9_threshold();
    criterion_10_lagrangian_bound();
    criterion_11_estimation();
    criterion_12_divergence();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 3;
    }
    std::printf("all criteria passed\n");
    return 0;
}
