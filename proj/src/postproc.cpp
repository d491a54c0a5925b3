#include "uec/postproc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "uec/rates.hpp"

namespace uec {

namespace {

// ----- exact rational simplex (two-phase, Bland's rule) -----
// maximize c.x subject to A x = b, x >= 0
class RationalSimplex {
  public:
    RationalSimplex(std::vector<std::vector<BigRat>> a, std::vector<BigRat> b,
                    std::vector<BigRat> c)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        m_ = a_.size();
        n_ = c_.size();
    }

    BigRat solve() {
        for (std::size_t i = 0; i < m_; ++i)
            if (b_[i] < 0) {
                for (auto& v : a_[i]) v = -v;
                b_[i] = -b_[i];
            }
        const std::size_t total = n_ + m_;  // artificials appended
        tab_.assign(m_, std::vector<BigRat>(total + 1, BigRat(0)));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) tab_[i][j] = a_[i][j];
            tab_[i][n_ + i] = 1;
            tab_[i][total] = b_[i];
            basis_[i] = n_ + i;
        }
        // phase 1: maximize -(sum of artificials)
        std::vector<BigRat> phase1(total, BigRat(0));
        for (std::size_t j = n_; j < total; ++j) phase1[j] = -1;
        run(phase1, total, total);
        BigRat infeas(0);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= n_) infeas += tab_[i][total];
        if (infeas != 0) throw InvariantError("simplex: infeasible program");
        // drive artificials out of the basis where possible
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            std::size_t enter = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (tab_[i][j] != 0) {
                    enter = j;
                    break;
                }
            if (enter < n_) pivot(i, enter, total);
        }
        // phase 2 with the real objective, artificial columns blocked
        std::vector<BigRat> phase2(total, BigRat(0));
        for (std::size_t j = 0; j < n_; ++j) phase2[j] = c_[j];
        run(phase2, total, n_);
        BigRat value(0);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) value += c_[basis_[i]] * tab_[i][total];
        return value;
    }

  private:
    void run(const std::vector<BigRat>& cost, std::size_t total, std::size_t allowed) {
        for (;;) {
            // reduced costs r_j = c_j - c_B . column_j
            std::size_t enter = total;
            for (std::size_t j = 0; j < allowed; ++j) {
                BigRat r = cost[j];
                for (std::size_t i = 0; i < m_; ++i)
                    if (cost[basis_[i]] != 0) r -= cost[basis_[i]] * tab_[i][j];
                if (r > 0) {
                    enter = j;  // Bland: smallest improving index
                    break;
                }
            }
            if (enter == total) return;
            std::size_t leave = m_;
            BigRat best_ratio(0);
            for (std::size_t i = 0; i < m_; ++i) {
                if (tab_[i][enter] <= 0) continue;
                const BigRat ratio = tab_[i][total] / tab_[i][enter];
                if (leave == m_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m_) throw InvariantError("simplex: unbounded program");
            pivot(leave, enter, total);
        }
    }

    void pivot(std::size_t row, std::size_t col, std::size_t total) {
        const BigRat inv = BigRat(1) / tab_[row][col];
        for (std::size_t j = 0; j <= total; ++j) tab_[row][j] *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || tab_[i][col] == 0) continue;
            const BigRat factor = tab_[i][col];
            for (std::size_t j = 0; j <= total; ++j) tab_[i][j] -= factor * tab_[row][j];
        }
        basis_[row] = col;
    }

    std::vector<std::vector<BigRat>> a_;
    std::vector<BigRat> b_, c_;
    std::vector<std::vector<BigRat>> tab_;
    std::vector<std::size_t> basis_;
    std::size_t m_ = 0, n_ = 0;
};

// exact distortion 1 - rank_i/rank_j of the claim i -> j
BigRat exact_distortion(const YieldPoint& from, const YieldPoint& to) {
    return BigRat(1) - from.rank / to.rank;
}

struct ExactCoefficients {
    // per upper-triangular pair (i, j >= i)
    std::vector<std::size_t> row_begin;  // index into flat arrays, per input row
    std::vector<std::size_t> target;     // j of each flat entry
    std::vector<BigRat> gain;            // mass_i * (f_j - lambda * w_ij)
    std::vector<BigRat> distortion_mass;  // mass_i * w_ij
    std::size_t count = 0;
};

ExactCoefficients build_exact(const SupportLaw& law, const YieldFunctional& f,
                              const BigRat& lambda) {
    const std::size_t m = law.support.size();
    ExactCoefficients ec;
    ec.row_begin.resize(m + 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
        ec.row_begin[i] = ec.count;
        ec.count += m - i;
    }
    ec.row_begin[m] = ec.count;
    ec.target.resize(ec.count);
    ec.gain.resize(ec.count);
    ec.distortion_mass.resize(ec.count);
    for (std::size_t i = 0; i < m; ++i) {
        const BigRat mass = rat_from_double(law.mass[i]);
        std::size_t pos = ec.row_begin[i];
        for (std::size_t j = i; j < m; ++j, ++pos) {
            const BigRat w = (j == i) ? BigRat(0) : exact_distortion(law.support[i], law.support[j]);
            ec.target[pos] = j;
            ec.gain[pos] = mass * (rat_from_double(f(law.support[j].yield)) - lambda * w);
            ec.distortion_mass[pos] = mass * w;
        }
    }
    return ec;
}

}  // namespace

// ----- TransitionKernel -----

bool TransitionKernel::is_identity(double tol) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const double expect = (i == j) ? 1.0 : 0.0;
            if (std::abs(rows[i][j] - expect) > tol) return false;
        }
    return true;
}

bool TransitionKernel::upper_triangular() const {
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (rows[i][j] != 0.0) return false;
    return true;
}

void TransitionKernel::validate() const {
    const std::size_t m = support.size();
    if (rows.size() != m) throw std::invalid_argument("kernel: row count != support size");
    for (std::size_t i = 1; i < m; ++i)
        if (!(support[i].yield > support[i - 1].yield))
            throw std::invalid_argument("kernel: support must be strictly ascending");
    for (const auto& row : rows) {
        if (row.size() != m) throw std::invalid_argument("kernel: ragged row");
        double sum = 0.0;
        for (double v : row) {
            if (v < -1e-15 || v > 1.0 + 1e-12) throw std::invalid_argument("kernel: bad entry");
            sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw std::invalid_argument("kernel: row does not sum to 1");
    }
}

TransitionKernel TransitionKernel::identity(int n, std::vector<YieldPoint> support) {
    TransitionKernel k;
    k.n = n;
    k.support = std::move(support);
    const std::size_t m = k.support.size();
    k.rows.assign(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) k.rows[i][i] = 1.0;
    return k;
}

SupportLaw support_law(const YieldDistribution& dist, bool append_top) {
    SupportLaw law;
    law.n = dist.n;
    law.d = dist.d;
    std::map<BigInt, double> by_rank;
    for (const auto& e : dist.entries) by_rank[e.dim_v] += e.probability;
    for (const auto& [rank, mass] : by_rank) {
        law.support.push_back(YieldPoint{log2_bigint(rank) / dist.n, BigRat(rank)});
        law.mass.push_back(mass);
    }
    if (append_top) {
        BigInt top(1);
        for (int i = 0; i < dist.n; ++i) top *= dist.d;
        if (law.support.empty() || law.support.back().rank != BigRat(top)) {
            law.support.push_back(
                YieldPoint{std::log2(static_cast<double>(dist.d)), BigRat(top)});
            law.mass.push_back(0.0);
        }
    }
    return law;
}

Pushforward apply_kernel(const SupportLaw& input, const TransitionKernel& kernel) {
    kernel.validate();
    if (kernel.support.size() != input.support.size())
        throw std::invalid_argument("apply_kernel: kernel support does not cover the input law");
    for (std::size_t i = 0; i < input.support.size(); ++i)
        if (kernel.support[i].rank != input.support[i].rank)
            throw std::invalid_argument("apply_kernel: kernel support does not cover the input law");

    const std::size_t m = input.support.size();
    Pushforward out;
    out.claimed = input;
    std::fill(out.claimed.mass.begin(), out.claimed.mass.end(), 0.0);
    double worst = 0.0, avg = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double q = kernel.rows[i][j];
            if (q == 0.0) continue;
            out.claimed.mass[j] += input.mass[i] * q;
            if (j > i) {
                const double w = rat_to_double(exact_distortion(input.support[i],
                                                                input.support[j]));
                worst = std::max(worst, w);
                avg += input.mass[i] * q * w;
            }
        }
    }
    out.distortion.worst_case = worst;
    out.distortion.average = avg;
    return out;
}

// ----- YieldFunctional -----

YieldFunctional YieldFunctional::step(double threshold) {
    YieldFunctional f;
    f.kind_ = Kind::step;
    f.threshold_ = threshold;
    return f;
}

YieldFunctional YieldFunctional::linear(double log2_d) {
    YieldFunctional f;
    f.kind_ = Kind::linear;
    f.log2_d_ = log2_d;
    return f;
}

YieldFunctional YieldFunctional::table(std::vector<std::pair<double, double>> points) {
    if (points.size() < 2) throw std::invalid_argument("functional table: need >= 2 points");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i].first <= points[i - 1].first || points[i].second < points[i - 1].second)
            throw std::invalid_argument("functional table: points must be increasing, f monotone");
    YieldFunctional f;
    f.kind_ = Kind::table;
    f.points_ = std::move(points);
    return f;
}

double YieldFunctional::operator()(double x) const {
    switch (kind_) {
        case Kind::step: return x >= threshold_ ? 1.0 : 0.0;
        case Kind::linear: return x / log2_d_;
        case Kind::table: {
            if (x <= points_.front().first) return points_.front().second;
            if (x >= points_.back().first) return points_.back().second;
            for (std::size_t i = 1; i < points_.size(); ++i) {
                if (x <= points_[i].first) {
                    const auto& [x0, y0] = points_[i - 1];
                    const auto& [x1, y1] = points_[i];
                    return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
                }
            }
            return points_.back().second;
        }
    }
    return 0.0;
}

double YieldFunctional::max_slope(double log2_d) const {
    switch (kind_) {
        case Kind::step: return std::numeric_limits<double>::infinity();
        case Kind::linear: return 1.0 / log2_d;
        case Kind::table: {
            double s = 0.0;
            for (std::size_t i = 1; i < points_.size(); ++i)
                s = std::max(s, (points_[i].second - points_[i - 1].second) /
                                    (points_[i].first - points_[i - 1].first));
            return s;
        }
    }
    return 0.0;
}

void YieldFunctional::validate_on(const std::vector<YieldPoint>& support, double log2_d) const {
    double prev = -std::numeric_limits<double>::infinity();
    for (const auto& pt : support) {
        const double v = (*this)(pt.yield);
        if (v < prev - 1e-12)
            throw std::invalid_argument("functional: not monotone on the support grid");
        prev = v;
    }
    const double at_zero = (*this)(0.0);
    const bool degenerate_step = kind_ == Kind::step && threshold_ <= 0.0;
    if (!degenerate_step && std::abs(at_zero) > 1e-12)
        throw std::invalid_argument("functional: f(0) must be 0");
    if (std::abs((*this)(log2_d) - 1.0) > 1e-12)
        throw std::invalid_argument("functional: f(log2 d) must be 1");
}

std::string YieldFunctional::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::step: os << "step@" << threshold_; break;
        case Kind::linear: os << "linear"; break;
        case Kind::table: os << "table[" << points_.size() << "]"; break;
    }
    return os.str();
}

double generalized_yield(const SupportLaw& law, const YieldFunctional& f) {
    f.validate_on(law.support, std::log2(static_cast<double>(law.d)));
    double s = 0.0;
    for (std::size_t i = 0; i < law.support.size(); ++i) s += law.mass[i] * f(law.support[i].yield);
    return s;
}

// ----- weighted-sum optimization -----

namespace {

OptimizeResult assemble(const SupportLaw& law, std::vector<std::size_t> choice,
                        const YieldFunctional& f, double lambda) {
    const std::size_t m = law.support.size();
    OptimizeResult r;
    r.kernel = TransitionKernel::identity(law.n, law.support);
    for (std::size_t i = 0; i < m; ++i) {
        if (choice[i] == i) continue;
        r.kernel.rows[i][i] = 0.0;
        r.kernel.rows[i][choice[i]] = 1.0;
        r.identity = false;
    }
    const auto push = apply_kernel(law, r.kernel);
    r.yield_term = generalized_yield(push.claimed, f);
    r.distortion_average = push.distortion.average;
    r.distortion_worst = push.distortion.worst_case;
    r.objective = r.yield_term - lambda * r.distortion_average;
    return r;
}

}  // namespace

OptimizeResult optimize_weighted_sum(const SupportLaw& law, const YieldFunctional& f,
                                     double lambda) {
    return optimize_weighted_sum(law, f, rat_from_double(lambda));
}

OptimizeResult optimize_weighted_sum(const SupportLaw& law, const YieldFunctional& f,
                                     const BigRat& lambda) {
    if (!(lambda > 1)) throw std::invalid_argument("optimize_weighted_sum: lambda > 1 required");
    f.validate_on(law.support, std::log2(static_cast<double>(law.d)));
    const std::size_t m = law.support.size();
    std::vector<std::size_t> choice(m);
    const double lambda_d = rat_to_double(lambda);

    if (m <= 12) {
        // exact route, cross-checked against the rational LP
        const auto ec = build_exact(law, f, lambda);
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t best = ec.row_begin[i];
            for (std::size_t pos = ec.row_begin[i] + 1; pos < ec.row_begin[i + 1]; ++pos)
                if (ec.gain[pos] > ec.gain[best]) best = pos;  // strict: smallest-y tie break
            choice[i] = ec.target[best];
        }
        const BigRat lp = lp_weighted_sum_value(law, f, lambda);
        const BigRat am = argmax_weighted_sum_value(law, f, lambda);
        if (lp != am)
            throw InvariantError("optimize_weighted_sum: LP and separable optima disagree");
    } else {
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t best = i;
            double best_gain = f(law.support[i].yield);
            for (std::size_t j = i + 1; j < m; ++j) {
                const double w = rat_to_double(exact_distortion(law.support[i], law.support[j]));
                const double g = f(law.support[j].yield) - lambda_d * w;
                // deviate from the diagonal only on a clear improvement
                if (g > best_gain + 1e-12) {
                    best = j;
                    best_gain = g;
                }
            }
            choice[i] = best;
        }
    }
    return assemble(law, std::move(choice), f, lambda_d);
}

BigRat argmax_weighted_sum_value(const SupportLaw& law, const YieldFunctional& f,
                                 const BigRat& lambda, bool distortion_free) {
    const auto ec = build_exact(law, f, lambda);
    BigRat total(0);
    const std::size_t m = law.support.size();
    for (std::size_t i = 0; i < m; ++i) {
        bool have = false;
        BigRat best(0);
        for (std::size_t pos = ec.row_begin[i]; pos < ec.row_begin[i + 1]; ++pos) {
            if (distortion_free && ec.distortion_mass[pos] != 0) continue;
            if (!have || ec.gain[pos] > best) {
                best = ec.gain[pos];
                have = true;
            }
        }
        if (have) total += best;
    }
    return total;
}

BigRat lp_weighted_sum_value(const SupportLaw& law, const YieldFunctional& f,
                             const BigRat& lambda, bool distortion_free) {
    const std::size_t m = law.support.size();
    if (m > 64) throw std::invalid_argument("lp_weighted_sum_value: support too large for the LP");
    const auto ec = build_exact(law, f, lambda);

    const std::size_t nvars = ec.count;
    const std::size_t nrows = m + (distortion_free ? 1 : 0);
    std::vector<std::vector<BigRat>> a(nrows, std::vector<BigRat>(nvars, BigRat(0)));
    std::vector<BigRat> b(nrows, BigRat(1));
    std::vector<BigRat> c(ec.gain);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t pos = ec.row_begin[i]; pos < ec.row_begin[i + 1]; ++pos) a[i][pos] = 1;
    if (distortion_free) {
        for (std::size_t pos = 0; pos < nvars; ++pos) a[m][pos] = ec.distortion_mass[pos];
        b[m] = 0;
    }
    return RationalSimplex(std::move(a), std::move(b), std::move(c)).solve();
}

OptimizeResult optimal_under_worst_constraint(const SupportLaw& law, const YieldFunctional& f,
                                              double r_n) {
    if (r_n < 0.0 || r_n >= 1.0)
        throw std::invalid_argument("optimal_under_worst_constraint: need 0 <= r_n < 1");
    const double log2d = std::log2(static_cast<double>(law.d));
    f.validate_on(law.support, log2d);
    const std::size_t m = law.support.size();

    OptimizeResult r;
    if (r_n == 0.0) {
        r.kernel = TransitionKernel::identity(law.n, law.support);
        r.identity = true;
        r.yield_term = generalized_yield(law, f);
        r.objective = r.yield_term;
        return r;
    }

    // maximal admissible uniform uplift: claimed rank = rank / (1 - r_n),
    // capped at d^n; claimed yields may sit off the lattice.
    const BigRat keep = BigRat(1) - rat_from_double(r_n);
    const BigRat top_rank = law.support.back().rank;
    std::map<BigRat, std::pair<double, double>> claimed;  // rank -> (yield, mass)
    std::vector<BigRat> target_rank(m);
    for (std::size_t i = 0; i < m; ++i) {
        BigRat t = law.support[i].rank / keep;
        if (t > top_rank) t = top_rank;
        target_rank[i] = t;
        auto& slot = claimed[t];
        slot.first = log2_bigrat(t) / law.n;
        slot.second += law.mass[i];
    }

    // combined support: originals plus claimed points
    std::map<BigRat, double> yields;
    for (const auto& pt : law.support) yields[pt.rank] = pt.yield;
    for (const auto& [rank, ym] : claimed) yields.emplace(rank, ym.first);

    TransitionKernel k;
    k.n = law.n;
    for (const auto& [rank, y] : yields) k.support.push_back(YieldPoint{y, rank});
    const std::size_t mm = k.support.size();
    k.rows.assign(mm, std::vector<double>(mm, 0.0));
    auto index_of = [&](const BigRat& rank) {
        for (std::size_t i = 0; i < mm; ++i)
            if (k.support[i].rank == rank) return i;
        throw InvariantError("optimal_under_worst_constraint: lost support point");
    };
    for (std::size_t i = 0; i < mm; ++i) k.rows[i][i] = 1.0;
    SupportLaw extended;
    extended.n = law.n;
    extended.d = law.d;
    extended.support = k.support;
    extended.mass.assign(mm, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t from = index_of(law.support[i].rank);
        const std::size_t to = index_of(target_rank[i]);
        extended.mass[from] = law.mass[i];
        if (to != from) {
            k.rows[from][from] = 0.0;
            k.rows[from][to] = 1.0;
        }
    }

    const auto push = apply_kernel(extended, k);
    r.kernel = std::move(k);
    r.identity = r.kernel.is_identity();
    r.yield_term = generalized_yield(push.claimed, f);
    r.distortion_average = push.distortion.average;
    r.distortion_worst = push.distortion.worst_case;
    r.objective = r.yield_term;
    if (r.distortion_worst > r_n + 1e-12)
        throw InvariantError("optimal_under_worst_constraint: distortion exceeds the constraint");
    return r;
}

AverageConstraintResult optimal_under_average_constraint(const SupportLaw& law,
                                                         const YieldFunctional& f, double r_n,
                                                         const SchmidtSpectrum& p) {
    if (r_n < 0.0 || r_n >= 1.0)
        throw std::invalid_argument("optimal_under_average_constraint: need 0 <= r_n < 1");
    const double log2d = std::log2(static_cast<double>(law.d));
    f.validate_on(law.support, log2d);
    const std::size_t m = law.support.size();

    TransitionKernel k = TransitionKernel::identity(law.n, law.support);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        k.rows[i][i] = 1.0 - r_n;
        k.rows[i][m - 1] = r_n;
    }
    const auto push = apply_kernel(law, k);

    AverageConstraintResult out;
    out.result.kernel = std::move(k);
    out.result.identity = out.result.kernel.is_identity();
    out.result.yield_term = generalized_yield(push.claimed, f);
    out.result.distortion_average = push.distortion.average;
    out.result.distortion_worst = push.distortion.worst_case;
    out.result.objective = out.result.yield_term;

    const double identity_value = generalized_yield(law, f);
    out.improvement = out.result.yield_term - identity_value;

    const double hp = shannon_entropy(p);
    out.lagrangian_upper = r_n / (1.0 - std::pow(static_cast<double>(law.d), -law.n));
    const double c = std::min(0.05, 0.5 * (log2d - hp));
    const double rate = c > 0.0 ? rate_function(p, hp + c) : 0.0;
    out.achievable_lower =
        r_n * (1.0 - f(hp + c)) * (1.0 - std::exp2(-static_cast<double>(law.n) * rate));
    out.bounds_hold = out.improvement <= out.lagrangian_upper + 1e-12 &&
                      out.improvement >= out.achievable_lower - 1e-12 &&
                      out.result.distortion_average <= r_n + 1e-12;
    return out;
}

TailBound shift_tail_bound_check(const SupportLaw& law, const TransitionKernel& kernel, double c,
                                 double r) {
    if (c <= 0.0) throw std::invalid_argument("shift_tail_bound_check: c > 0 required");
    kernel.validate();
    std::map<BigRat, double> mass;
    for (std::size_t i = 0; i < law.support.size(); ++i) mass[law.support[i].rank] = law.mass[i];
    double tail = 0.0;
    for (std::size_t i = 0; i < kernel.support.size(); ++i) {
        const auto it = mass.find(kernel.support[i].rank);
        if (it == mass.end() || it->second == 0.0) continue;
        for (std::size_t j = i + 1; j < kernel.support.size(); ++j)
            if (kernel.rows[i][j] > 0.0 &&
                kernel.support[j].yield - kernel.support[i].yield >= c / kernel.n - 1e-15)
                tail += it->second * kernel.rows[i][j];
    }
    TailBound tb;
    tb.tail_probability = tail;
    tb.bound = r / (1.0 - std::exp2(-c));
    tb.holds = tail <= tb.bound + 1e-12;
    return tb;
}

std::string kernel_to_text(const TransitionKernel& kernel) {
    std::ostringstream os;
    os.precision(17);
    os << "uec-kernel 1\n";
    os << "n " << kernel.n << "\n";
    os << "support " << kernel.support.size() << "\n";
    for (const auto& pt : kernel.support) os << pt.yield << " " << pt.rank << "\n";
    os << "rows\n";
    for (const auto& row : kernel.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << ' ';
            os << row[j];
        }
        os << '\n';
    }
    return os.str();
}

TransitionKernel kernel_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    int version = 0;
    is >> tag >> version;
    if (tag != "uec-kernel" || version != 1)
        throw std::invalid_argument("kernel_from_text: bad header");
    TransitionKernel k;
    std::size_t m = 0;
    is >> tag >> k.n;
    if (tag != "n") throw std::invalid_argument("kernel_from_text: expected 'n'");
    is >> tag >> m;
    if (tag != "support") throw std::invalid_argument("kernel_from_text: expected 'support'");
    k.support.resize(m);
    for (auto& pt : k.support) {
        std::string rank;
        is >> pt.yield >> rank;
        pt.rank = BigRat(rank);
    }
    is >> tag;
    if (tag != "rows") throw std::invalid_argument("kernel_from_text: expected 'rows'");
    k.rows.assign(m, std::vector<double>(m, 0.0));
    for (auto& row : k.rows)
        for (auto& v : row)
            if (!(is >> v)) throw std::invalid_argument("kernel_from_text: truncated rows");
    k.validate();
    return k;
}

}  // namespace uec
