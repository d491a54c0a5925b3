#pragma once

#include <string>
#include <utility>
#include <vector>

#include "uec/schur.hpp"

namespace uec {

// A point on the claimed-yield axis. The Schmidt rank 2^{n*yield} is kept
// exactly so shift distortions 1 - rank_x/rank_y are exact rationals.
struct YieldPoint {
    double yield = 0.0;
    BigRat rank;
};

// Classical postprocessing: relabels the protocol's yield according to a
// row-stochastic matrix. Claiming y > x ("excessive claim") costs
// distortion 1 - 2^{-n(y-x)}; claims never touch the quantum output.
struct TransitionKernel {
    int n = 0;
    std::vector<YieldPoint> support;        // ascending by yield
    std::vector<std::vector<double>> rows;  // rows[i][j] = Q(y_j | y_i)

    bool is_identity(double tol = 0.0) const;
    bool upper_triangular() const;
    void validate() const;  // throws on non-stochastic rows

    static TransitionKernel identity(int n, std::vector<YieldPoint> support);
};

// Input law aggregated on the distinct yield lattice (plus the top point
// log2 d, the largest claimable yield).
struct SupportLaw {
    int n = 0;
    int d = 0;
    std::vector<YieldPoint> support;
    std::vector<double> mass;
};
SupportLaw support_law(const YieldDistribution& dist, bool append_top = true);

struct DistortionReport {
    double worst_case = 0.0;  // max distortion over transitions present in the kernel
    double average = 0.0;     // input-law weighted
};

struct Pushforward {
    SupportLaw claimed;  // law of the claimed yield
    DistortionReport distortion;
};
Pushforward apply_kernel(const SupportLaw& input, const TransitionKernel& kernel);

// Monotone bounded yield measure f with f(0) = 0, f(log2 d) = 1.
class YieldFunctional {
  public:
    static YieldFunctional step(double threshold);   // f(x) = 1{x >= threshold}
    static YieldFunctional linear(double log2_d);    // f(x) = x / log2 d
    // piecewise-linear through (x, f(x)) points; endpoints pinned by caller
    static YieldFunctional table(std::vector<std::pair<double, double>> points);

    double operator()(double x) const;
    double max_slope(double log2_d) const;  // used for the optimality threshold n0
    void validate_on(const std::vector<YieldPoint>& support, double log2_d) const;
    std::string describe() const;

  private:
    enum class Kind { step, linear, table } kind_ = Kind::linear;
    double threshold_ = 0.0;
    double log2_d_ = 1.0;
    std::vector<std::pair<double, double>> points_;
};

double generalized_yield(const SupportLaw& law, const YieldFunctional& f);

struct OptimizeResult {
    TransitionKernel kernel;
    double objective = 0.0;        // E[f(Y)] - lambda * eps_bar (weighted-sum problems)
    double yield_term = 0.0;       // E[f(Y)] through the kernel
    double distortion_average = 0.0;
    double distortion_worst = 0.0;
    bool identity = true;
};

// Maximize E[f(Y)] - lambda * eps_bar over upper-triangular kernels.
// Row-separable: each input picks its best single target (smallest-y tie
// break, so exact ties keep the identity). For supports of size <= 12 the
// decision runs on exact rational coefficients and the rational simplex
// solves the same LP; the two optima are asserted equal. The BigRat
// overload admits weights like 1/(1 - d^{-n}) without rounding.
OptimizeResult optimize_weighted_sum(const SupportLaw& law, const YieldFunctional& f,
                                     double lambda);
OptimizeResult optimize_weighted_sum(const SupportLaw& law, const YieldFunctional& f,
                                     const BigRat& lambda);

// Exact LP value for the weighted-sum objective (coefficients are the
// exactly rationalized doubles, so equality with the argmax is exact).
// With distortion_free = true the average distortion is constrained to 0.
BigRat lp_weighted_sum_value(const SupportLaw& law, const YieldFunctional& f,
                             const BigRat& lambda, bool distortion_free = false);
// Row-argmax value over the same exact coefficients.
BigRat argmax_weighted_sum_value(const SupportLaw& law, const YieldFunctional& f,
                                 const BigRat& lambda, bool distortion_free = false);

// Maximal admissible uniform uplift under worst-case distortion <= r_n.
OptimizeResult optimal_under_worst_constraint(const SupportLaw& law, const YieldFunctional& f,
                                              double r_n);

struct AverageConstraintResult {
    OptimizeResult result;
    double improvement = 0.0;       // over the identity kernel, exact: r_n * E[1 - f(X)]
    double lagrangian_upper = 0.0;  // r_n / (1 - d^{-n})
    double achievable_lower = 0.0;  // r_n (1 - f(H+c)) (1 - 2^{-n D(H+c||p)})
    bool bounds_hold = false;
};
// The uplift-to-maximum kernel with row mass r_n.
AverageConstraintResult optimal_under_average_constraint(const SupportLaw& law,
                                                         const YieldFunctional& f, double r_n,
                                                         const SchmidtSpectrum& p);

// Tail inequality for kernels with average distortion <= r:
// Pr{shift >= c/n} <= r / (1 - 2^{-c}).
struct TailBound {
    bool holds = false;
    double tail_probability = 0.0;
    double bound = 0.0;
};
TailBound shift_tail_bound_check(const SupportLaw& law, const TransitionKernel& kernel, double c,
                                 double r);

// Plain-text matrix serialization (header: n and support; then one
// probability row per support point).
std::string kernel_to_text(const TransitionKernel& kernel);
TransitionKernel kernel_from_text(const std::string& text);

}  // namespace uec
