// Command-line surface for the universal concentration simulator.
// Exit codes: 0 success, 2 precondition/usage failure, 3 invariant or
// verification failure, 4 resource-cap refusal.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "uec/estimation.hpp"
#include "uec/oracle.hpp"
#include "uec/postproc.hpp"
#include "uec/protocols.hpp"
#include "uec/rates.hpp"
#include "uec/report.hpp"
#include "uec/schur.hpp"

namespace {

using namespace uec;

struct GlobalOptions {
    std::string format = "csv";
    std::string output;
    int threads = 0;
    std::uint64_t seed = 0;
    SchurOptions schur;
};

void emit(const ExperimentReport& report, const GlobalOptions& go, const std::string& extra = "") {
    std::string text = go.format == "json" ? report.to_json() : report.to_csv();
    text += extra;
    if (go.output.empty()) {
        std::cout << text;
        return;
    }
    std::string path = go.output;
    if (const char* dir = std::getenv("UEC_OUTPUT_DIR");
        dir != nullptr && !path.empty() && path.front() != '/')
        path = std::string(dir) + "/" + path;
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output path: " + path);
    out << text;
}

std::vector<int> parse_ladder(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    if (out.empty()) throw std::invalid_argument("empty n ladder");
    for (int n : out)
        if (n < 1) throw std::invalid_argument("ladder entries must be >= 1");
    return out;
}

YieldFunctional parse_functional(const std::string& text, double log2d) {
    if (text == "linear") return YieldFunctional::linear(log2d);
    if (text.rfind("step@", 0) == 0) return YieldFunctional::step(std::stod(text.substr(5)));
    if (text.rfind("table:", 0) == 0) {
        std::ifstream in(text.substr(6));
        if (!in) throw std::invalid_argument("cannot open functional table file");
        std::vector<std::pair<double, double>> pts;
        double x = 0.0, y = 0.0;
        while (in >> x >> y) pts.emplace_back(x, y);
        return YieldFunctional::table(std::move(pts));
    }
    throw std::invalid_argument("functional must be linear, step@R, or table:FILE");
}

std::string fd(double v) { return format_double(v); }

int cmd_dims(int n, int d, const GlobalOptions& go) {
    ExperimentReport rep;
    rep.command = "dims";
    rep.config = {{"n", n}, {"d", d}};
    rep.columns = {"lambda", "dim_v_determinant", "dim_v_product", "dim_u", "yield_bits"};
    BigInt sum = 0;
    for (const auto& lambda : enumerate_young_indices(n, d)) {
        const BigInt dv = dim_v_product(lambda);
        const BigInt du = dim_u(lambda);
        sum += dv * du;
        const std::string det =
            d <= 8 ? dim_v_determinant(lambda).convert_to<std::string>() : "skipped";
        rep.add_row({lambda.str(), det, dv.convert_to<std::string>(),
                     du.convert_to<std::string>(),
                     n > 0 ? fd(log2_bigint(dv) / n) : fd(0.0)});
    }
    BigInt expect = 1;
    for (int i = 0; i < n; ++i) expect *= d;
    rep.footer["sum_dim_u_dim_v"] = sum.convert_to<std::string>();
    rep.footer["d_pow_n"] = expect.convert_to<std::string>();
    rep.footer["identity_holds"] = (sum == expect);
    emit(rep, go);
    if (sum != expect) throw InvariantError("dimension identity failed");
    return 0;
}

int cmd_measure(int n, const std::string& spectrum, const GlobalOptions& go) {
    const auto p = SchmidtSpectrum::parse(spectrum);
    const auto dist = yield_distribution(n, p, go.schur);
    ExperimentReport rep;
    rep.command = "measure";
    rep.config = {{"n", n}, {"spectrum", spectrum}, {"exact", dist.exact}};
    rep.columns = {"lambda", "dim_v", "yield_bits", "probability", "probability_exact"};
    for (const auto& e : dist.entries)
        rep.add_row({e.index.str(), e.dim_v.convert_to<std::string>(), fd(e.yield_bits),
                     fd(e.probability),
                     e.exact_probability ? format_rational(*e.exact_probability) : ""});
    rep.footer["total_probability"] = fd(dist.total_probability());
    rep.footer["entropy"] = fd(shannon_entropy(p));
    rep.footer["average_yield"] = fd(average_yield(dist));
    emit(rep, go);
    return 0;
}

int cmd_exponents(const std::string& spectrum, double R, const std::string& ladder,
                  const GlobalOptions& go) {
    const auto p = SchmidtSpectrum::parse(spectrum);
    const auto ns = parse_ladder(ladder);
    const double target = rate_function(p, R);
    ExperimentReport rep;
    rep.command = "exponents";
    rep.config = {{"spectrum", spectrum}, {"R", R}, {"n_ladder", ladder}};
    rep.columns = {"n",
                   "failure_probability",
                   "strong_converse_probability",
                   "one_minus_total_fidelity",
                   "failure_exponent",
                   "strong_converse_exponent",
                   "fidelity_exponent"};
    for (int n : ns) {
        const auto dist = yield_distribution(n, p, go.schur);
        const double fail = failure_probability(dist, R);
        const double conv = strong_converse_probability(dist, R);
        const double omf = one_minus_total_fidelity(dist, R);
        auto expo = [n](double v) {
            return v > 0.0 ? -std::log2(v) / n : std::numeric_limits<double>::infinity();
        };
        rep.add_row({std::to_string(n), fd(fail), fd(conv), fd(omf), fd(expo(fail)),
                     fd(expo(conv)), fd(expo(omf))});
    }
    rep.footer["rate_function"] = fd(target);
    rep.footer["entropy"] = fd(shannon_entropy(p));
    emit(rep, go);
    return 0;
}

int cmd_compare(const std::string& spectrum, const std::string& ladder, const std::string& cn,
                const GlobalOptions& go) {
    const auto p = SchmidtSpectrum::parse(spectrum);
    const auto ns = parse_ladder(ladder);
    const auto coeff = expansion_coefficients_bbps(p);
    const double h = shannon_entropy(p);
    const bool qubit = p.dim() == 2 && !p.has_repeated_entries();

    ExperimentReport rep;
    rep.command = "compare";
    rep.config = {{"spectrum", spectrum}, {"n_ladder", ladder}, {"c_n", cn}};
    rep.columns = {"n",
                   "average_yield",
                   "bbps_exact",
                   "estimation_bound",
                   "hardy_per_copy",
                   "gap_times_n",
                   "bbps_residual_times_n",
                   "hardy_residual_times_n"};
    for (int n : ns) {
        const double c_n = cn == "sqrt" ? std::sqrt(static_cast<double>(n)) : std::stod(cn);
        const auto dist = yield_distribution(n, p, go.schur);
        const double cstar = average_yield(dist);
        const double bbps = bbps_average_yield_exact(n, p);
        const double bound = estimation_based_bound(n, c_n, p);
        const double bbps_resid =
            n * std::abs(bbps - (h + coeff.log_coeff * std::log2(n) / n + coeff.const_coeff / n));
        std::string hardy = "nan", hardy_resid = "nan";
        if (qubit) {
            const double hv = hardy_qubit_average_yield(n, p);
            hardy = fd(hv);
            hardy_resid = fd(n * std::abs(hv - hardy_qubit_expansion(n, p)));
        }
        rep.add_row({std::to_string(n), fd(cstar), fd(bbps), fd(bound), hardy,
                     fd(n * (bbps - cstar)), fd(bbps_resid), hardy_resid});
    }
    if (qubit && p.strictly_positive())
        rep.footer["gap_constant"] = fd(cstar_bbps_gap(ns.front(), p, go.schur).analytic_constant);
    rep.footer["expansion_log_coeff"] = fd(coeff.log_coeff);
    rep.footer["expansion_const_coeff"] = fd(coeff.const_coeff);
    rep.footer["entropy"] = fd(h);
    emit(rep, go);
    return 0;
}

int cmd_postproc(const std::string& spectrum, int n, const std::string& f_text,
                 const std::string& constraint, double lambda, double r_n,
                 const GlobalOptions& go) {
    const auto p = SchmidtSpectrum::parse(spectrum);
    const double log2d = std::log2(static_cast<double>(p.dim()));
    const auto f = parse_functional(f_text, log2d);
    const auto law = support_law(yield_distribution(n, p, go.schur));

    ExperimentReport rep;
    rep.command = "postproc";
    rep.config = {{"spectrum", spectrum}, {"n", n},   {"f", f_text},
                  {"constraint", constraint},         {"lambda", lambda},
                  {"r_n", r_n}};
    rep.columns = {"support_yield", "support_rank", "input_mass"};
    for (std::size_t i = 0; i < law.support.size(); ++i)
        rep.add_row({fd(law.support[i].yield), format_rational(law.support[i].rank),
                     fd(law.mass[i])});

    TransitionKernel kernel;
    if (constraint == "weighted") {
        const auto res = optimize_weighted_sum(law, f, lambda);
        kernel = res.kernel;
        rep.footer["objective"] = fd(res.objective);
        rep.footer["yield_term"] = fd(res.yield_term);
        rep.footer["identity"] = res.identity;
        rep.footer["distortion_average"] = fd(res.distortion_average);
        rep.footer["threshold_n0"] =
            fd(-std::log2(1.0 - 1.0 / lambda) * f.max_slope(log2d));
    } else if (constraint == "worst") {
        const auto res = optimal_under_worst_constraint(law, f, r_n);
        kernel = res.kernel;
        rep.footer["yield_term"] = fd(res.yield_term);
        rep.footer["identity_value"] = fd(generalized_yield(law, f));
        rep.footer["identity"] = res.identity;
        rep.footer["distortion_worst"] = fd(res.distortion_worst);
    } else if (constraint == "average") {
        const auto res = optimal_under_average_constraint(law, f, r_n, p);
        kernel = res.result.kernel;
        rep.footer["yield_term"] = fd(res.result.yield_term);
        rep.footer["improvement"] = fd(res.improvement);
        rep.footer["lagrangian_upper"] = fd(res.lagrangian_upper);
        rep.footer["achievable_lower"] = fd(res.achievable_lower);
        rep.footer["bounds_hold"] = res.bounds_hold;
        if (!res.bounds_hold)
            throw InvariantError("postproc: average-constraint bounds violated");
    } else {
        throw std::invalid_argument("constraint must be weighted, worst, or average");
    }
    emit(rep, go, kernel_to_text(kernel));
    return 0;
}

int cmd_estimate(const std::string& spectrum, double delta, const std::string& ladder,
                 const GlobalOptions& go) {
    const auto p = SchmidtSpectrum::parse(spectrum);
    const auto ns = parse_ladder(ladder);
    const auto tails = estimator_error_exponent(p, delta, ns, go.schur);
    ExperimentReport rep;
    rep.command = "estimate";
    rep.config = {{"spectrum", spectrum}, {"delta", delta}, {"n_ladder", ladder}};
    rep.columns = {"n",
                   "lower_tail",
                   "upper_tail",
                   "lower_exponent",
                   "upper_exponent",
                   "n_mse_primary",
                   "n_mse_type"};
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const auto mse = estimator_mse(p, ns[i], go.schur);
        rep.add_row({std::to_string(ns[i]), fd(tails.lower_probability[i]),
                     fd(tails.upper_probability[i]), fd(tails.lower_exponent[i]),
                     fd(tails.upper_exponent[i]), fd(mse.n_mse_primary), fd(mse.n_mse_type)});
    }
    rep.footer["lower_target"] = fd(tails.lower_target);
    rep.footer["upper_target"] = fd(tails.upper_target);
    rep.footer["cr_bound"] = fd(estimator_mse(p, ns.front(), go.schur).cr_bound);
    emit(rep, go);
    return 0;
}

int cmd_oracle_check(const std::string& spectrum, int n, int rotations,
                     const GlobalOptions& go) {
    const auto p = SchmidtSpectrum::parse(spectrum);
    OracleCaps caps;
    ExperimentReport rep;
    rep.command = "oracle-check";
    rep.config = {{"spectrum", spectrum}, {"n", n}, {"rotations", rotations},
                  {"seed", go.seed}};
    rep.columns = {"check", "value", "tolerance", "pass"};
    bool all_ok = true;
    auto record = [&](const std::string& name, double value, double tol) {
        const bool ok = value <= tol;
        all_ok = all_ok && ok;
        rep.add_row({name, fd(value), fd(tol), ok ? "1" : "0"});
    };

    record("projector_family_residual", verify_projector_family(p.dim(), n, caps), 1e-10);
    record("max_outcome_deviation", verify_outcome_law(build_state(p, n, caps), p, caps), 1e-10);
    for (int r = 0; r < rotations; ++r) {
        const auto st = build_state_rotated(p, n, random_unitary(p.dim(), go.seed + 2 * r + 1),
                                            random_unitary(p.dim(), go.seed + 2 * r + 2), caps);
        record("rotated_outcome_deviation_" + std::to_string(r), verify_outcome_law(st, p, caps),
               1e-10);
    }
    const auto base = build_state(p, n, caps);
    for (const auto& lambda : enumerate_young_indices(n, p.dim())) {
        if (outcome_probability(lambda, p) <= 1e-6) continue;
        const auto chk = verify_extracted_entanglement(base, lambda, caps);
        record("group_residual_" + lambda.str(), chk.group_residual, 1e-8);
        record("entropy_residual_" + lambda.str(), chk.entropy_residual, 1e-8);
        if (!chk.groups_ok) {
            record("group_multiplicity_" + lambda.str(), 1.0, 0.0);
        }
    }
    rep.footer["all_pass"] = all_ok;
    emit(rep, go);
    if (!all_ok) throw InvariantError("oracle-check: verification failed");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"universal entanglement concentration simulator"};
    app.require_subcommand(1);

    GlobalOptions go;
    app.add_option("--format", go.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", go.output,
                   "output path (relative paths respect UEC_OUTPUT_DIR); stdout when absent");
    app.add_option("--threads", go.threads, "worker thread cap (0 = library default)");
    app.add_option("--seed", go.seed, "seed recorded in reports and used for randomized checks");
    app.add_option("--exact-n-cap", go.schur.exact_n_cap,
                   "largest n evaluated in exact rational arithmetic");
    app.add_option("--max-entries", go.schur.max_entries, "partition-count resource cap");

    int n = 1, d = 2, rotations = 3;
    double R = 0.5, delta = 0.1, lambda = 1.001, r_n = 0.0;
    std::string spectrum, ladder = "50,100,200", f_text = "linear", constraint = "weighted",
                cn = "sqrt";

    auto* dims = app.add_subcommand("dims", "irrep dimensions and yields per shape");
    dims->add_option("--n", n, "copy count")->required()->check(CLI::NonNegativeNumber);
    dims->add_option("--d", d, "local dimension")->required()->check(CLI::PositiveNumber);

    auto* measure = app.add_subcommand("measure", "outcome law of the measurement");
    measure->add_option("--n", n, "copy count")->required();
    measure->add_option("--spectrum", spectrum, "Schmidt spectrum, e.g. 3/4,1/4")->required();

    auto* exponents = app.add_subcommand("exponents", "failure/converse/fidelity exponents");
    exponents->add_option("--spectrum", spectrum)->required();
    exponents->add_option("--R", R, "rate threshold in bits/copy")->required();
    exponents->add_option("--n-ladder", ladder, "comma-separated copy counts");

    auto* compare = app.add_subcommand("compare", "average yields across protocols");
    compare->add_option("--spectrum", spectrum)->required();
    compare->add_option("--n-ladder", ladder);
    compare->add_option("--cn", cn, "estimation copies: a number or 'sqrt'");

    auto* postproc = app.add_subcommand("postproc", "optimal classical postprocessing kernels");
    postproc->add_option("--spectrum", spectrum)->required();
    postproc->add_option("--n", n)->required();
    postproc->add_option("--f", f_text, "yield functional: linear, step@R, table:FILE");
    postproc->add_option("--constraint", constraint, "weighted, worst, or average");
    postproc->add_option("--lambda", lambda, "distortion weight (weighted constraint)");
    postproc->add_option("--rn", r_n, "distortion budget (worst/average constraint)");

    auto* estimate = app.add_subcommand("estimate", "entropy-estimation error statistics");
    estimate->add_option("--spectrum", spectrum)->required();
    estimate->add_option("--delta", delta, "two-sided error threshold")->required();
    estimate->add_option("--n-ladder", ladder);

    auto* oracle = app.add_subcommand("oracle-check", "dense-tensor ground-truth verification");
    oracle->add_option("--spectrum", spectrum)->required();
    oracle->add_option("--n", n)->required();
    oracle->add_option("--rotations", rotations, "number of random local-basis rotations");

    try {
        app.parse(argc, argv);
        set_max_threads(go.threads);
        if (dims->parsed()) return cmd_dims(n, d, go);
        if (measure->parsed()) return cmd_measure(n, spectrum, go);
        if (exponents->parsed()) return cmd_exponents(spectrum, R, ladder, go);
        if (compare->parsed()) return cmd_compare(spectrum, ladder, cn, go);
        if (postproc->parsed())
            return cmd_postproc(spectrum, n, f_text, constraint, lambda, r_n, go);
        if (estimate->parsed()) return cmd_estimate(spectrum, delta, ladder, go);
        if (oracle->parsed()) return cmd_oracle_check(spectrum, n, rotations, go);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const uec::ResourceCapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 4;
    } catch (const uec::InvariantError& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
