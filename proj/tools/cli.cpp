#include "cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "macroreal/inequalities.hpp"
#include "macroreal/montecarlo.hpp"
#include "macroreal/optimize.hpp"
#include "macroreal/oracle.hpp"
#include "macroreal/parallel.hpp"

namespace macroreal::cli {
namespace {

using nlohmann::json;

constexpr double kDegree = kPi / 180.0;

// Runtime failures that are not usage errors (exit 1).
struct RuntimeFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PointFlags {
    double theta = 0.0;
    double phi = 0.0;
    double tau = 0.0;
    double lambda = 1.0;
    bool degrees = false;

    void add_to(CLI::App* cmd, bool with_lambda = true) {
        cmd->add_option("--theta", theta, "initial-state polar angle (radians)");
        cmd->add_option("--phi", phi, "initial-state relative phase (radians)");
        cmd->add_option("--tau", tau, "phase dE*dt between measurements (radians)");
        if (with_lambda) cmd->add_option("--lambda", lambda, "sharpness in (0, 1]");
        cmd->add_flag("--degrees", degrees, "read --theta, --phi, --tau in degrees");
    }

    ModelParams params() const {
        const double k = degrees ? kDegree : 1.0;
        ModelParams p{theta * k, phi * k, tau * k, lambda};
        p.validate();
        return p;
    }
};

struct GridFlags {
    GridResolution grid;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--theta-points", grid.theta, "theta grid points")->check(CLI::PositiveNumber);
        cmd->add_option("--tau-points", grid.tau, "tau grid points")->check(CLI::PositiveNumber);
        cmd->add_option("--fallback-phi-points", grid.fallback_phi, "phi points of the fallback sweep")
            ->check(CLI::PositiveNumber);
    }
};

std::string f6(double v) {
    return fmt::format("{:.6f}", v);
}

std::string cmd_eval(const std::string& name, const PointFlags& point, bool as_json) {
    const ViolationResult r = evaluate(name, point.params());
    if (as_json) {
        return json{{"spec", name}, {"value", r.value}, {"bound", r.bound}, {"margin", r.margin}}.dump() +
               "\n";
    }
    return fmt::format("{} value={} bound={} margin={}\n", name, f6(r.value), f6(r.bound), f6(r.margin));
}

std::string cmd_maximize(const std::string& name, double lambda, const GridResolution& grid,
                         bool as_json) {
    const OptimizationReport r = maximize_violation(name, lambda, grid);
    const ModelParams& p = r.best_params;
    if (as_json) {
        return json{{"spec", name},
                    {"lambda", lambda},
                    {"value", r.best_value},
                    {"bound", r.bound},
                    {"margin", r.margin()},
                    {"theta", p.theta},
                    {"phi", p.phi},
                    {"tau", p.tau},
                    {"refinement_iterations", r.refinement_iterations},
                    {"gradient_norm", r.gradient_norm_at_optimum},
                    {"fallback_improved", r.fallback_improved}}
                   .dump() +
               "\n";
    }
    return fmt::format(
        "{} lambda={} value={} bound={} margin={} theta={} phi={} tau={} iterations={} "
        "gradient_norm={:.3e} fallback_improved={}\n",
        name, f6(lambda), f6(r.best_value), f6(r.bound), f6(r.margin()), f6(p.theta), f6(p.phi),
        f6(p.tau), r.refinement_iterations, r.gradient_norm_at_optimum, r.fallback_improved);
}

std::string cmd_critical_lambda(const std::string& name, const PointFlags& point, bool point_given,
                                const GridResolution& grid, bool as_json) {
    std::optional<ModelParams> at;
    CriticalLambda result;
    const char* method = "analytic";
    if (auto n = parse_lgi_name(name); n && !point_given) {
        result.lambda = lgi_critical_lambda(*n);
    } else {
        method = "bisection";
        ModelParams p;
        if (point_given) {
            p = point.params();
        } else {
            p = maximize_violation(name, 1.0, grid).best_params;
        }
        try {
            result = critical_lambda(name, p.theta, p.phi, p.tau);
        } catch (const NonMonotoneProfileError& e) {
            throw RuntimeFailure(e.what());
        }
        at = p;
    }
    const char* status = !result.violated_at_one ? "never-violated"
                         : result.violated_always ? "always-violated"
                                                  : "threshold";
    if (as_json) {
        json j{{"spec", name}, {"critical_lambda", result.lambda}, {"method", method}, {"status", status}};
        if (at) j["point"] = {{"theta", at->theta}, {"phi", at->phi}, {"tau", at->tau}};
        return j.dump() + "\n";
    }
    std::string line = fmt::format("{} critical_lambda={} method={} status={}", name, f6(result.lambda),
                                   method, status);
    if (at) line += fmt::format(" theta={} phi={} tau={}", f6(at->theta), f6(at->phi), f6(at->tau));
    return line + "\n";
}

std::string cmd_scan(double lo, double hi, int steps, const GridResolution& grid) {
    if (!(lo > 0.0 && lo < hi && hi <= 1.0)) {
        throw DomainError("scan requires 0 < lambda-min < lambda-max <= 1");
    }
    if (steps < 2) throw DomainError("scan requires steps >= 2");
    std::string csv = "lambda,wlgi3_max,lgi3_margin,lgi4_margin,nsit_max\n";
    for (int i = 0; i < steps; ++i) {
        const double lambda = i + 1 == steps ? hi : lo + (hi - lo) * i / (steps - 1);
        const double wlgi3 = maximize_wlgi3_catalog(lambda, grid).best_value;
        // K_n peaks at tau = pi / (2n) for every initial state.
        const double lgi3 = lgi_kn(3, {0.0, 0.0, kPi / 6, lambda}).margin;
        const double lgi4 = lgi_kn(4, {0.0, 0.0, kPi / 8, lambda}).margin;
        const double nsit = nsit_delta({kPi / 4, kPi / 2, kPi / 4, lambda});
        csv += fmt::format("{},{},{},{},{}\n", f6(lambda), f6(wlgi3), f6(lgi3), f6(lgi4), f6(nsit));
    }
    return csv;
}

std::string cmd_validate(bool as_json, bool& all_pass) {
    const CertificationReport report = certify_catalog();
    all_pass = report.all_pass();
    auto entry_line = [](const CertificationEntry& e) {
        std::string s = fmt::format("{} classical_max={} declared_upper={}", e.name, e.classical_max,
                                    e.declared_upper);
        if (e.classical_min) {
            s += fmt::format(" classical_min={} declared_lower={}", *e.classical_min, *e.declared_lower);
        }
        return s + (e.pass ? " PASS" : " FAIL") + "\n";
    };
    if (as_json) {
        json entries = json::array();
        for (const auto* group : {&report.wlgi3, &report.wlgi_n, &report.lgi}) {
            for (const auto& e : *group) {
                json j{{"name", e.name},
                       {"classical_max", e.classical_max},
                       {"declared_upper", e.declared_upper},
                       {"pass", e.pass}};
                if (e.classical_min) {
                    j["classical_min"] = *e.classical_min;
                    j["declared_lower"] = *e.declared_lower;
                }
                entries.push_back(j);
            }
        }
        json residuals = json::array();
        for (const auto& r : report.residuals) {
            residuals.push_back({{"n", r.n_times}, {"total", r.total}, {"non_negative", r.all_non_negative()}});
        }
        return json{{"entries", entries}, {"residuals", residuals}, {"summary", report.summary()},
                    {"pass", all_pass}}
                   .dump() +
               "\n";
    }
    std::string text;
    for (const auto* group : {&report.wlgi3, &report.wlgi_n, &report.lgi}) {
        for (const auto& e : *group) text += entry_line(e);
    }
    for (const auto& r : report.residuals) {
        text += fmt::format("residual n={} total={} non_negative={}\n", r.n_times, r.total,
                            r.all_non_negative());
    }
    return text + report.summary() + "\n";
}

std::string cmd_mc(const std::string& name, const PointFlags& point, std::uint64_t samples,
                   std::uint64_t seed, bool as_json) {
    const ModelParams p = point.params();
    const InequalityEstimate est = estimate_inequality(name, p, samples, seed);
    const double analytic = evaluate(find_spec(name), p).value;
    const double z = est.std_error > 0.0 ? (est.estimate - analytic) / est.std_error : 0.0;
    if (as_json) {
        json terms = json::array();
        for (const auto& t : est.terms) {
            terms.push_back({{"sign", t.sign},
                             {"event", t.event.to_string()},
                             {"frequency", t.frequency},
                             {"std_error", t.std_error}});
        }
        return json{{"spec", name},         {"estimate", est.estimate}, {"std_error", est.std_error},
                    {"analytic", analytic}, {"z", z},                   {"samples", samples},
                    {"seed", seed},         {"terms", terms}}
                   .dump() +
               "\n";
    }
    return fmt::format("{} estimate={} std_error={} analytic={} z={:.3f} samples={} seed={}\n", name,
                       f6(est.estimate), f6(est.std_error), f6(analytic), z, samples, seed);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Macrorealism criteria for an oscillating two-level system"};
    app.require_subcommand(1);

    bool as_json = false;
    std::string spec_name;
    PointFlags point;
    GridFlags grid;

    auto* eval = app.add_subcommand("eval", "evaluate a criterion at one parameter point");
    eval->add_option("spec", spec_name, "criterion name")->required();
    point.add_to(eval);
    eval->add_flag("--json", as_json, "emit JSON");

    double max_lambda = 1.0;
    auto* maximize = app.add_subcommand("maximize", "maximize a criterion over theta, phi, tau");
    maximize->add_option("spec", spec_name, "criterion name")->required();
    maximize->add_option("--lambda", max_lambda, "sharpness in (0, 1]");
    grid.add_to(maximize);
    maximize->add_flag("--json", as_json, "emit JSON");

    auto* critical = app.add_subcommand("critical-lambda", "solve for the critical sharpness");
    critical->add_option("spec", spec_name, "criterion name")->required();
    point.add_to(critical, /*with_lambda=*/false);
    grid.add_to(critical);
    critical->add_flag("--json", as_json, "emit JSON");

    double scan_lo = 0.5, scan_hi = 1.0;
    int scan_steps = 11;
    std::string scan_out;
    auto* scan = app.add_subcommand("scan", "tabulate criterion maxima against lambda as CSV");
    scan->add_option("--lambda-min", scan_lo, "smallest lambda");
    scan->add_option("--lambda-max", scan_hi, "largest lambda");
    scan->add_option("--steps", scan_steps, "number of rows (>= 2)");
    scan->add_option("--out", scan_out, "output CSV file")->required();
    grid.add_to(scan);

    auto* validate = app.add_subcommand("validate", "certify classical bounds by enumeration");
    validate->add_flag("--json", as_json, "emit JSON");

    std::uint64_t mc_samples = 1000000, mc_seed = 1;
    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of a criterion");
    mc->add_option("spec", spec_name, "criterion name")->required();
    point.add_to(mc);
    mc->add_option("--samples", mc_samples, "samples per sub-ensemble")->check(CLI::PositiveNumber);
    mc->add_option("--seed", mc_seed, "random seed");
    mc->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help;
        const int code = app.exit(e, help, err);
        if (code == 0) {
            out << help.str();
            return kOk;
        }
        return kUsage;
    }

    if (!apply_thread_env()) {
        err << "error: MACROREAL_THREADS must be a non-negative integer\n";
        return kUsage;
    }

    try {
        std::string text;
        if (*eval) {
            text = cmd_eval(spec_name, point, as_json);
        } else if (*maximize) {
            text = cmd_maximize(spec_name, max_lambda, grid.grid, as_json);
        } else if (*critical) {
            const bool point_given = critical->count("--theta") + critical->count("--phi") +
                                         critical->count("--tau") >
                                     0;
            text = cmd_critical_lambda(spec_name, point, point_given, grid.grid, as_json);
        } else if (*scan) {
            const std::string csv = cmd_scan(scan_lo, scan_hi, scan_steps, grid.grid);
            std::ofstream file(scan_out, std::ios::binary);
            if (!file || !(file << csv) || !file.flush()) {
                err << "error: cannot write " << scan_out << "\n";
                return kRuntimeFailure;
            }
        } else if (*validate) {
            bool all_pass = false;
            text = cmd_validate(as_json, all_pass);
            out << text;
            return all_pass ? kOk : kRuntimeFailure;
        } else if (*mc) {
            text = cmd_mc(spec_name, point, mc_samples, mc_seed, as_json);
        }
        out << text;
        return kOk;
    } catch (const UnknownSpecError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kRuntimeFailure;
    }
}

}  // namespace macroreal::cli
