#include "ratarma/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "ratarma/approx.hpp"
#include "ratarma/arma.hpp"
#include "ratarma/norms.hpp"
#include "ratarma/toeplitz.hpp"

namespace ratarma {

namespace checks {

// Expected values with tolerances for the built-in pass/fail gates. Single
// source of truth for every command.
constexpr double kRemarkSupLower = 0.6931;      // |log(1/2)| bound, attained at theta = pi
constexpr double kRemarkSupLowerTol = 1e-3;
constexpr double kRemarkL2Upper = 0.5774;       // sqrt(1/3) rounded up
constexpr double kInverseExpansionTol = 1e-12;  // 1/(1 - z/2) = sum (z/2)^n is exact in doubles
constexpr double kTruncationFormulaTol = 1e-9;  // sup error of geometric truncation is 2^(1-k)
constexpr double kOptimizeSupTarget = 0.021;    // beats the 0.0265 coefficient-matching error
constexpr double kSpectralGapAt512 = 0.015;     // 1 + z/2 compression gap at dim 512
constexpr double kHinfH0 = 0.36787944117144233; // e^{-1}
constexpr double kHinfH0Tol = 1e-9;

}  // namespace checks

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

std::string fmt_complex(Complex c) {
    std::ostringstream os;
    os << std::setprecision(12) << c.real();
    if (std::abs(c.imag()) > 0.0) os << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag()) << "i";
    return os.str();
}

nlohmann::json config_json(const RunConfig& c) {
    return {{"order", c.order},
            {"grid_tol", c.grid_tol},
            {"budget", c.budget},
            {"restarts", c.restarts},
            {"seed", c.seed}};
}

struct CheckList {
    nlohmann::json entries = nlohmann::json::array();
    bool all_passed = true;

    bool add(std::string name, bool passed, double observed, std::string bound) {
        entries.push_back({{"name", std::move(name)},
                           {"passed", passed},
                           {"observed", observed},
                           {"bound", std::move(bound)}});
        all_passed = all_passed && passed;
        return passed;
    }
};

std::string pass_line(bool passed, const std::string& what) {
    return std::string(passed ? "[PASS] " : "[FAIL] ") + what + "\n";
}

std::string describe_model(const ArmaModel& model) {
    std::ostringstream os;
    os << "Y_t =";
    bool first = true;
    for (std::size_t j = 1; j <= model.ar.size(); ++j) {
        const Complex c = -model.ar[j - 1];
        os << (first ? " " : " + ") << "(" << fmt_complex(c) << ") Y_{t-" << j << "}";
        first = false;
    }
    for (std::size_t j = 0; j < model.ma.size(); ++j) {
        if (model.ma[j] == Complex{0.0, 0.0} && model.ma.size() > 1) continue;
        os << (first ? " " : " + ") << "(" << fmt_complex(model.ma[j]) << ") ";
        if (j == 0)
            os << "eps_t";
        else
            os << "eps_{t-" << j << "}";
        first = false;
    }
    return os.str();
}

RationalTransfer log_half_pade_init(int m, int n, int order) {
    const PowerSeries target = PowerSeries::log1p_scaled(Complex{0.5, 0.0}, order);
    try {
        RationalTransfer candidate = pade(target, m, n);
        if (candidate.den().degree() == 0 || is_stationary(candidate).verdict) return candidate;
    } catch (const SingularPadeSystem&) {
    }
    // Feasible fallback: the degree-m truncation over 1.
    std::vector<Complex> head(target.coeffs().begin(), target.coeffs().begin() + m + 1);
    return RationalTransfer::from_polynomial(Polynomial(std::move(head)));
}

}  // namespace

CommandResult cmd_examples(const RunConfig& config) {
    CommandResult out;
    CheckList checks_list;
    std::ostringstream text;
    nlohmann::json results;

    // -- norm comparison for the transfer function log(1 + z/2) ---------------
    const NormEstimate sup = supnorm_circle(Evaluatable::log1p_form(Complex{0.5, 0.0}),
                                            config.grid_tol);
    const ProcessL2 l2 = process_l2(
        ProcessSpec::from_series(PowerSeries::log1p_scaled(Complex{0.5, 0.0}, 64), "log(1+L/2)"),
        64);

    text << "== norm comparison: x(z) = log(1 + z/2) ==\n";
    text << "  supnorm on S^1    : " << fmt(sup.value) << "  (argmax theta = " << fmt(sup.argmax_angle)
         << ", grid " << sup.grid_points << ")\n";
    text << "  l2 of Wold coeffs : " << fmt(l2.value) << "  (K = 64)\n";
    text << pass_line(
        checks_list.add("supnorm_lower", sup.value >= checks::kRemarkSupLower - checks::kRemarkSupLowerTol,
                        sup.value, ">= " + fmt(checks::kRemarkSupLower - checks::kRemarkSupLowerTol)),
        "supnorm >= " + fmt(checks::kRemarkSupLower - checks::kRemarkSupLowerTol));
    text << pass_line(checks_list.add("l2_upper", l2.value <= checks::kRemarkL2Upper, l2.value,
                                      "<= " + fmt(checks::kRemarkL2Upper)),
                      "l2 <= " + fmt(checks::kRemarkL2Upper));
    text << pass_line(checks_list.add("supnorm_exceeds_l2", sup.value > l2.value, sup.value - l2.value,
                                      "> 0"),
                      "supnorm > l2");
    results["norm_comparison"] = {{"supnorm", sup.value},
                                  {"argmax_angle", sup.argmax_angle},
                                  {"l2", l2.value}};

    // -- invertibility dictionary ---------------------------------------------
    const RationalTransfer sharp{Polynomial({Complex{1.0, 0.0}, Complex{-2.0, 0.0}}),
                                 Polynomial({Complex{1.0, 0.0}})};
    const RationalTransfer mild{Polynomial({Complex{1.0, 0.0}, Complex{-0.5, 0.0}}),
                                Polynomial({Complex{1.0, 0.0}})};
    const StabilityVerdict sharp_v = is_invertible(sharp);
    const StabilityVerdict mild_v = is_invertible(mild);

    text << "\n== invertibility dictionary ==\n";
    text << "  x(L) = 1 - 2L  : " << (sharp_v.verdict ? "invertible" : "not invertible")
         << " (root modulus " << fmt(sharp_v.report.roots[0].modulus) << ")\n";
    text << pass_line(checks_list.add("one_minus_2L_not_invertible", !sharp_v.verdict,
                                      sharp_v.report.roots[0].modulus, "root inside"),
                      "1 - 2L is not invertible");
    text << "  y(L) = 1 - L/2 : " << (mild_v.verdict ? "invertible" : "not invertible")
         << " (root modulus " << fmt(mild_v.report.roots[0].modulus) << ")\n";
    text << pass_line(checks_list.add("one_minus_half_L_invertible", mild_v.verdict,
                                      mild_v.report.roots[0].modulus, "root outside"),
                      "1 - L/2 is invertible");

    const PowerSeries inverse_expansion = taylor(formal_inverse(mild), 3);
    double dev = 0.0;
    for (int n = 0; n <= 3; ++n)
        dev = std::max(dev, std::abs(inverse_expansion.coeff(n) - std::pow(0.5, n)));
    text << "  inverse expansion of 1 - L/2: ";
    for (int n = 0; n <= 3; ++n) text << fmt(inverse_expansion.coeff(n).real()) << (n < 3 ? ", " : "\n");
    text << pass_line(checks_list.add("inverse_expansion", dev < checks::kInverseExpansionTol, dev,
                                      "< " + fmt(checks::kInverseExpansionTol)),
                      "inverse expansion matches (1, 1/2, 1/4, 1/8)");
    results["invertibility"] = {{"one_minus_2L", sharp_v.verdict},
                                {"one_minus_half_L", mild_v.verdict},
                                {"inverse_expansion_dev", dev}};

    // -- geometric truncation table -------------------------------------------
    const RationalTransfer geo{Polynomial({Complex{1.0, 0.0}}),
                               Polynomial({Complex{1.0, 0.0}, Complex{-0.5, 0.0}})};
    const PowerSeries geo_series = PowerSeries::geometric(Complex{0.5, 0.0}, config.order);
    const Evaluatable geo_eval = Evaluatable::from(geo);
    text << "\n== truncation of x(z) = 1/(1 - z/2) ==\n";
    text << "  k   sup error        closed form 2^(1-k)\n";
    nlohmann::json table = nlohmann::json::array();
    double worst_dev = 0.0;
    for (int k = 1; k <= 10; ++k) {
        std::vector<Complex> head(geo_series.coeffs().begin(), geo_series.coeffs().begin() + k);
        const RationalTransfer trunc = RationalTransfer::from_polynomial(Polynomial(std::move(head)));
        const double err = error_supnorm(geo_eval, Evaluatable::from(trunc), config.grid_tol).value;
        const double formula = std::pow(2.0, 1 - k);
        worst_dev = std::max(worst_dev, std::abs(err - formula));
        std::ostringstream row;
        row << "  " << std::left << std::setw(4) << k << std::setw(17) << fmt(err) << fmt(formula);
        text << row.str() << "\n";
        table.push_back({{"k", k}, {"sup_error", err}, {"closed_form", formula}});
    }
    text << pass_line(checks_list.add("truncation_formula", worst_dev < checks::kTruncationFormulaTol,
                                      worst_dev, "< " + fmt(checks::kTruncationFormulaTol)),
                      "truncation errors match 2^(1-k)");
    const double exact_err = error_supnorm(geo_eval, geo_eval, config.grid_tol).value;
    text << "  exact rational 1/(1 - z/2): sup error " << fmt(exact_err) << "\n";
    text << pass_line(checks_list.add("exact_rational", exact_err < 1e-12, exact_err, "< 1e-12"),
                      "exact rational reproduces the series");
    results["truncation_table"] = table;

    out.text = text.str();
    out.all_passed = checks_list.all_passed;
    out.json = {{"command", "examples"},
                {"config", config_json(config)},
                {"results", results},
                {"checks", checks_list.entries}};
    return out;
}

CommandResult cmd_figure1(const RunConfig& config, int grid) {
    if (grid < 64) throw Error("figure1: grid must be at least 64");
    CommandResult out;
    const Evaluatable target = Evaluatable::log1p_form(Complex{0.5, 0.0});
    const RationalTransfer matching{Polynomial({Complex{0.0, 0.0}, Complex{0.5, 0.0}}),
                                    Polynomial({Complex{1.0, 0.0}, Complex{0.25, 0.0}})};
    const RationalTransfer better{Polynomial({Complex{0.0, 0.0}, Complex{1.0 / 1.98, 0.0}}),
                                  Polynomial({Complex{1.0, 0.0}, Complex{1.0 / 3.96, 0.0}})};

    std::ostringstream csv;
    csv << "theta,pade_abs_err,nonpade_abs_err\n";
    nlohmann::json rows = nlohmann::json::array();
    double max1 = 0.0, max2 = 0.0;
    for (int k = 0; k < grid; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / grid;
        const Complex z = std::polar(1.0, theta);
        const double e1 = std::abs(target(z) - eval_rational(matching, z));
        const double e2 = std::abs(target(z) - eval_rational(better, z));
        max1 = std::max(max1, e1);
        max2 = std::max(max2, e2);
        csv << fmt(theta) << "," << fmt(e1) << "," << fmt(e2) << "\n";
        rows.push_back({theta, e1, e2});
    }
    csv << "max," << fmt(max1) << "," << fmt(max2) << "\n";

    out.text = csv.str();
    out.json = {{"command", "figure1"},
                {"config", config_json(config)},
                {"results",
                 {{"grid", grid},
                  {"columns", {"theta", "pade_abs_err", "nonpade_abs_err"}},
                  {"rows", rows},
                  {"pade_max", max1},
                  {"nonpade_max", max2}}},
                {"checks", nlohmann::json::array()}};
    return out;
}

CommandResult cmd_optimize(const RunConfig& config, int m, int n) {
    CommandResult out;
    CheckList checks_list;
    std::ostringstream text;

    const PowerSeries target_series = PowerSeries::log1p_scaled(Complex{0.5, 0.0}, config.order);
    const Evaluatable target = Evaluatable::log1p_form(Complex{0.5, 0.0});
    const RationalTransfer init = log_half_pade_init(m, n, std::max(config.order, m + n));

    OptimizeOptions opts;
    opts.budget = config.budget;
    opts.restarts = config.restarts;
    opts.seed = config.seed;
    opts.eval_tol = config.grid_tol;
    opts.expansion_order = config.order;
    opts.target_series = target_series;

    const NormEstimate init_sup = error_supnorm(target, Evaluatable::from(init), config.grid_tol);
    const ApproxResult best = optimize_supnorm(target, m, n, init, opts);

    auto l2_of = [&](const RationalTransfer& r) {
        return l2_distance(ProcessSpec::from_series(target_series, "log(1+L/2)"),
                           ProcessSpec::from_rational(r, "candidate"), config.order)
            .value;
    };
    const double init_l2 = l2_of(init);
    const double best_l2 = best.l2_error ? *best.l2_error : l2_of(best.candidate);

    auto describe_candidate = [&](const char* name, const RationalTransfer& r, double sup_err,
                                  double l2_err) {
        text << name << "\n  num:";
        for (int j = 0; j <= r.num().degree(); ++j) text << " " << fmt_complex(r.num().coeff(j));
        text << "\n  den:";
        for (int j = 0; j <= r.den().degree(); ++j) text << " " << fmt_complex(r.den().coeff(j));
        text << "\n  sup error: " << fmt(sup_err) << "\n  l2 error (K=" << config.order
             << "): " << fmt(l2_err) << "\n  " << describe_model(from_rational(r)) << "\n";
    };

    text << "target x(z) = log(1 + z/2), orders (m, n) = (" << m << ", " << n << ")\n\n";
    describe_candidate("coefficient-matching baseline:", init, init_sup.value, init_l2);
    text << "\n";
    describe_candidate("supnorm-optimized:", best.candidate, best.sup_error->value, best_l2);
    text << "\n  objective evaluations: " << best.iterations << "\n";
    text << "  feasible (stationary with margin): " << (best.feasible ? "yes" : "no") << "\n";

    text << pass_line(checks_list.add("no_regression", best.sup_error->value <= init_sup.value + 1e-12,
                                      best.sup_error->value, "<= " + fmt(init_sup.value)),
                      "optimized sup error does not exceed the baseline");
    text << pass_line(checks_list.add("feasible", best.feasible, best.feasible ? 1.0 : 0.0, "= 1"),
                      "optimized candidate is stationary with margin");
    if (m == 1 && n == 1) {
        text << pass_line(
            checks_list.add("beats_target", best.sup_error->value <= checks::kOptimizeSupTarget,
                            best.sup_error->value, "<= " + fmt(checks::kOptimizeSupTarget)),
            "sup error <= " + fmt(checks::kOptimizeSupTarget));
    }

    auto rational_json = [](const RationalTransfer& r) {
        nlohmann::json num = nlohmann::json::array(), den = nlohmann::json::array();
        for (int j = 0; j <= r.num().degree(); ++j)
            num.push_back({r.num().coeff(j).real(), r.num().coeff(j).imag()});
        for (int j = 0; j <= r.den().degree(); ++j)
            den.push_back({r.den().coeff(j).real(), r.den().coeff(j).imag()});
        return nlohmann::json{{"num", num}, {"den", den}};
    };

    out.text = text.str();
    out.all_passed = checks_list.all_passed;
    out.json = {{"command", "optimize"},
                {"config", config_json(config)},
                {"results",
                 {{"m", m},
                  {"n", n},
                  {"baseline", rational_json(init)},
                  {"baseline_sup_error", init_sup.value},
                  {"baseline_l2_error", init_l2},
                  {"candidate", rational_json(best.candidate)},
                  {"candidate_sup_error", best.sup_error->value},
                  {"candidate_l2_error", best_l2},
                  {"evaluations", best.iterations},
                  {"feasible", best.feasible}}},
                {"checks", checks_list.entries}};
    return out;
}

CommandResult cmd_conjecture(const RunConfig& config, const std::vector<int>& budgets,
                             int k_expand) {
    CommandResult out;
    ConjectureOptions opts;
    opts.budgets = budgets;
    opts.k_expand = k_expand;
    opts.restarts = config.restarts;
    opts.budget_per_restart = config.budget;
    opts.seed = config.seed;

    const std::vector<ConjectureCell> table = conjecture_explorer(opts);

    std::ostringstream csv;
    csv << "budget,kind,m,n,l2_error,target_l2_tail_bound_beyond_K,evaluations,status\n";
    nlohmann::json rows = nlohmann::json::array();
    for (const ConjectureCell& cell : table) {
        csv << cell.budget << "," << cell.kind << "," << cell.m << "," << cell.n << ","
            << fmt(cell.l2_error) << "," << fmt(cell.target_tail_bound) << "," << cell.evaluations
            << "," << cell.status << "\n";
        rows.push_back({{"budget", cell.budget},
                        {"kind", cell.kind},
                        {"m", cell.m},
                        {"n", cell.n},
                        {"l2_error", cell.l2_error},
                        {"target_l2_tail_bound_beyond_K", cell.target_tail_bound},
                        {"evaluations", cell.evaluations},
                        {"status", cell.status}});
    }

    out.text = csv.str();
    out.json = {{"command", "conjecture"},
                {"config", config_json(config)},
                {"results",
                 {{"budgets", budgets},
                  {"k_expand", k_expand},
                  {"note",
                   "truncation rows include the exact tail sqrt(sum_{n>budget} 1/n^2); arma rows "
                   "are the coefficient-space l2 through K with the target tail bound beside"},
                  {"rows", rows}}},
                {"checks", nlohmann::json::array()}};
    return out;
}

CommandResult cmd_spectral_check(const RunConfig& config, const std::vector<int>& dims) {
    CommandResult out;
    CheckList checks_list;
    std::ostringstream text;
    const int max_dim = *std::max_element(dims.begin(), dims.end());

    struct NamedSeries {
        std::string name;
        PowerSeries series;
    };
    const std::vector<NamedSeries> functions = {
        {"1 + z/2",
         taylor(RationalTransfer{Polynomial({Complex{1.0, 0.0}, Complex{0.5, 0.0}}),
                                 Polynomial({Complex{1.0, 0.0}})},
                std::max(max_dim - 1, 8))},
        {"(z/2)/(1 + z/4)",
         taylor(RationalTransfer{Polynomial({Complex{0.0, 0.0}, Complex{0.5, 0.0}}),
                                 Polynomial({Complex{1.0, 0.0}, Complex{0.25, 0.0}})},
                std::max(max_dim - 1, 8))}};

    nlohmann::json reports = nlohmann::json::array();
    for (const NamedSeries& f : functions) {
        const SpectralLemmaReport report = spectral_lemma_check(f.series, dims, config.grid_tol);
        text << "== compression norms: f(z) = " << f.name << " ==\n";
        text << "  supnorm on S^1: " << fmt(report.supnorm.value) << "\n";
        nlohmann::json rows = nlohmann::json::array();
        for (const SpectralLemmaRow& row : report.rows) {
            text << "  dim " << std::setw(5) << row.dim << " : " << fmt(row.op_norm) << "\n";
            rows.push_back({{"dim", row.dim}, {"op_norm", row.op_norm}});
        }
        text << pass_line(checks_list.add("monotone[" + f.name + "]", report.monotone,
                                          report.terminal_gap, "nondecreasing"),
                          "operator norms nondecreasing in dim");
        text << pass_line(checks_list.add("bounded[" + f.name + "]", report.bounded,
                                          report.terminal_gap, "<= supnorm + tol"),
                          "operator norms bounded by the supnorm");
        if (report.rows.back().dim >= 512) {
            text << pass_line(
                checks_list.add("terminal_gap[" + f.name + "]",
                                report.terminal_gap < checks::kSpectralGapAt512, report.terminal_gap,
                                "< " + fmt(checks::kSpectralGapAt512)),
                "terminal gap < " + fmt(checks::kSpectralGapAt512));
        }
        text << "\n";
        reports.push_back({{"function", f.name},
                           {"supnorm", report.supnorm.value},
                           {"refinement_gap", report.supnorm.refinement_gap},
                           {"rows", rows},
                           {"monotone", report.monotone},
                           {"bounded", report.bounded},
                           {"terminal_gap", report.terminal_gap}});
    }

    const HinfCounterexampleReport hinf =
        hinf_counterexample_report(std::max(config.order, 64), 256);
    text << "== bounded invertible counterexample: h(z) = exp(-(1+z)/(1-z)) ==\n";
    text << "  h_0            : " << fmt(hinf.h0) << "\n";
    text << "  min |h + 2|    : " << fmt(hinf.min_abs_h_plus_2) << "  (disk grid, radius 0.999)\n";
    text << "  l2 partial sum : " << fmt(hinf.l2_partial) << "\n";
    text << "  l1 partial sums (growth only, no verdict):\n";
    nlohmann::json l1_rows = nlohmann::json::array();
    for (const auto& [k, v] : hinf.l1_rows) {
        text << "    k = " << std::setw(5) << k << " : " << fmt(v) << "\n";
        l1_rows.push_back({{"k", k}, {"l1_partial", v}});
    }
    text << pass_line(checks_list.add("h0", std::abs(hinf.h0 - checks::kHinfH0) < checks::kHinfH0Tol,
                                      hinf.h0, "= e^{-1} +- 1e-9"),
                      "h_0 = e^{-1}");
    text << pass_line(checks_list.add("min_h_plus_2", hinf.min_abs_h_plus_2 >= 1.0,
                                      hinf.min_abs_h_plus_2, ">= 1"),
                      "min |h + 2| >= 1 on the disk grid");
    text << pass_line(checks_list.add("l2_partial", hinf.l2_partial <= 1.0, hinf.l2_partial, "<= 1"),
                      "l2 partial sum <= 1");

    out.text = text.str();
    out.all_passed = checks_list.all_passed;
    out.json = {{"command", "spectral-check"},
                {"config", config_json(config)},
                {"results",
                 {{"dims", dims},
                  {"functions", reports},
                  {"hinf_counterexample",
                   {{"order", hinf.order},
                    {"grid", hinf.grid},
                    {"h0", hinf.h0},
                    {"min_abs_h_plus_2", hinf.min_abs_h_plus_2},
                    {"l1_rows", l1_rows},
                    {"l2_partial", hinf.l2_partial}}}}},
                {"checks", checks_list.entries}};
    return out;
}

void emit(const CommandResult& result, const RunConfig& config) {
    const std::string payload = config.json ? result.json.dump(2) + "\n" : result.text;
    if (config.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(config.out_path, std::ios::binary);
    if (!file) throw Error("cannot open output path: " + config.out_path);
    file << payload;
}

}  // namespace ratarma
