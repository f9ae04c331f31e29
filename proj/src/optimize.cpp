#include "macroreal/optimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <tuple>

namespace macroreal {
namespace {

constexpr double kGolden = 0.6180339887498949;  // (sqrt(5) - 1) / 2
constexpr double kLineTol = 1e-10;
constexpr double kSweepTol = 1e-12;
constexpr int kMaxSweeps = 10000;
constexpr double kFallbackMargin = 1e-6;
constexpr double kFdStep = 1e-6;

enum Coord { kTheta = 0, kPhi = 1, kTau = 2 };

struct Box {
    std::array<double, 3> lo{0.0, 0.0, 0.0};
    std::array<double, 3> hi{kPi / 2, 2 * kPi, kPi};
};

double& coord(ModelParams& p, int c) {
    return c == kTheta ? p.theta : (c == kPhi ? p.phi : p.tau);
}

double coord(const ModelParams& p, int c) {
    return c == kTheta ? p.theta : (c == kPhi ? p.phi : p.tau);
}

// Golden-section maximization of f on [a, b]. Returns the best point seen,
// which is never worse than `incumbent`.
template <typename F>
std::pair<double, double> golden_max(F&& f, double a, double b, double x0, double f0) {
    double best_x = x0, best_f = f0;
    auto consider = [&](double x, double fx) {
        if (fx > best_f) best_x = x, best_f = fx;
    };
    double c = b - kGolden * (b - a);
    double d = a + kGolden * (b - a);
    double fc = f(c), fd = f(d);
    consider(c, fc);
    consider(d, fd);
    while (b - a > kLineTol) {
        if (fc > fd) {
            b = d, d = c, fd = fc;
            c = b - kGolden * (b - a);
            fc = f(c);
            consider(c, fc);
        } else {
            a = c, c = d, fc = fd;
            d = a + kGolden * (b - a);
            fd = f(d);
            consider(d, fd);
        }
    }
    return {best_x, best_f};
}

struct Refined {
    Candidate best;
    int sweeps = 0;
};

// Coordinate ascent with golden-section line searches of half-width `step`
// around the current point, until a sweep gains less than kSweepTol.
template <typename Objective>
Refined coordinate_ascent(Objective&& objective, Candidate start, const std::vector<int>& coords,
                          const std::array<double, 3>& step, const Box& box) {
    Refined r{start, 0};
    while (r.sweeps < kMaxSweeps) {
        ++r.sweeps;
        const double before = r.best.value;
        for (int c : coords) {
            ModelParams probe = r.best.params;
            const double x0 = coord(probe, c);
            const double a = std::max(box.lo[c], x0 - step[c]);
            const double b = std::min(box.hi[c], x0 + step[c]);
            auto line = [&](double x) {
                coord(probe, c) = x;
                return objective(probe);
            };
            auto [x, fx] = golden_max(line, a, b, x0, r.best.value);
            coord(r.best.params, c) = x;
            r.best.value = fx;
        }
        if (r.best.value - before < kSweepTol) break;
    }
    return r;
}

template <typename Objective>
double gradient_norm(Objective&& objective, const ModelParams& at, const std::vector<int>& coords,
                     const Box& box) {
    double sq = 0.0;
    for (int c : coords) {
        ModelParams up = at, down = at;
        const double x = coord(at, c);
        const double hi = std::min(box.hi[c], x + kFdStep);
        const double lo = std::max(box.lo[c], x - kFdStep);
        coord(up, c) = hi;
        coord(down, c) = lo;
        const double g = (objective(up) - objective(down)) / (hi - lo);
        sq += g * g;
    }
    return std::sqrt(sq);
}

double spacing(const std::vector<double>& axis, double fallback) {
    return axis.size() > 1 ? axis[1] - axis[0] : fallback;
}

}  // namespace

bool better(const Candidate& a, const Candidate& b) {
    if (a.value != b.value) return a.value > b.value;
    return std::tie(a.params.theta, a.params.phi, a.params.tau) <
           std::tie(b.params.theta, b.params.phi, b.params.tau);
}

SpecBatch::SpecBatch(std::vector<InequalitySpec> specs) : specs_(std::move(specs)) {
    std::map<EventSpec, std::size_t> index;
    for (const auto& spec : specs_) {
        spec.validate();
        n_times_ = std::max(n_times_, spec.n_times);
        std::vector<IndexedTerm> compiled;
        for (const auto& t : spec.terms) {
            auto [it, inserted] = index.try_emplace(t.event, events_.size());
            if (inserted) events_.push_back(t.event);
            compiled.push_back({t.sign, it->second});
        }
        terms_.push_back(std::move(compiled));
    }
}

void SpecBatch::evaluate(const ModelParams& params, std::vector<double>& values,
                         std::vector<double>& scratch) const {
    const MeasurementPlan plan = MeasurementPlan::from_params(params, n_times_);
    scratch.resize(events_.size());
    for (std::size_t e = 0; e < events_.size(); ++e) scratch[e] = joint_probability(plan, events_[e]);
    values.assign(specs_.size(), 0.0);
    for (std::size_t k = 0; k < specs_.size(); ++k) {
        for (const auto& t : terms_[k]) values[k] += t.sign * scratch[t.event];
    }
}

double SpecBatch::evaluate_one(std::size_t k, const ModelParams& params) const {
    const MeasurementPlan plan = MeasurementPlan::from_params(params, n_times_);
    double v = 0.0;
    for (const auto& t : terms_[k]) v += t.sign * joint_probability(plan, events_[t.event]);
    return v;
}

std::vector<double> theta_axis(int points) {
    if (points < 2) return {kPi / 4};
    std::vector<double> axis(points);
    for (int i = 0; i < points; ++i) axis[i] = (kPi / 2) * i / (points - 1);
    return axis;
}

std::vector<double> tau_axis(int points) {
    std::vector<double> axis(std::max(points, 1));
    for (std::size_t k = 0; k < axis.size(); ++k) axis[k] = kPi * (k + 1.0) / (axis.size() + 1.0);
    return axis;
}

std::vector<double> phi_axis(int points) {
    std::vector<double> axis(std::max(points, 1));
    for (std::size_t j = 0; j < axis.size(); ++j) axis[j] = 2 * kPi * j / axis.size();
    return axis;
}

std::vector<Candidate> grid_search(const SpecBatch& batch, double lambda,
                                   const std::vector<double>& thetas,
                                   const std::vector<double>& phis,
                                   const std::vector<double>& taus, Exec exec) {
    validate_sharpness(lambda);
    const std::size_t n_specs = batch.size();
    const Candidate sentinel{{0.0, 0.0, 0.0, lambda}, -HUGE_VAL};
    std::vector<Candidate> best(n_specs, sentinel);

    const auto outer = static_cast<long>(thetas.size() * phis.size());
    auto scan_block = [&](long o, std::vector<Candidate>& local, std::vector<double>& values,
                          std::vector<double>& scratch) {
        const double theta = thetas[o / phis.size()];
        const double phi = phis[o % phis.size()];
        for (double tau : taus) {
            const ModelParams p{theta, phi, tau, lambda};
            batch.evaluate(p, values, scratch);
            for (std::size_t k = 0; k < n_specs; ++k) {
                const Candidate c{p, values[k]};
                if (better(c, local[k])) local[k] = c;
            }
        }
    };

    if (exec == Exec::Serial) {
        std::vector<double> values, scratch;
        for (long o = 0; o < outer; ++o) scan_block(o, best, values, scratch);
        return best;
    }

#pragma omp parallel
    {
        std::vector<Candidate> local(n_specs, sentinel);
        std::vector<double> values, scratch;
#pragma omp for schedule(dynamic, 4) nowait
        for (long o = 0; o < outer; ++o) scan_block(o, local, values, scratch);
#pragma omp critical(macroreal_grid_merge)
        for (std::size_t k = 0; k < n_specs; ++k) {
            if (better(local[k], best[k])) best[k] = local[k];
        }
    }
    return best;
}

std::vector<OptimizationReport> maximize_violation(const std::vector<InequalitySpec>& specs,
                                                   double lambda, const GridResolution& grid,
                                                   Exec exec) {
    validate_sharpness(lambda);
    const SpecBatch batch(specs);

    const auto thetas = theta_axis(grid.theta);
    const auto taus = tau_axis(grid.tau);
    const std::vector<double> restricted_phis = {kPi / 2, 3 * kPi / 2};
    const auto restricted = grid_search(batch, lambda, thetas, restricted_phis, taus, exec);

    const auto f_thetas = theta_axis(grid.fallback_theta);
    const auto f_phis = phi_axis(grid.fallback_phi);
    const auto f_taus = tau_axis(grid.fallback_tau);
    const auto fallback = grid_search(batch, lambda, f_thetas, f_phis, f_taus, exec);

    const Box box;
    const std::array<double, 3> step{spacing(thetas, kPi / 4), 0.0, spacing(taus, kPi / 2)};
    const std::array<double, 3> f_step{spacing(f_thetas, kPi / 4), spacing(f_phis, kPi),
                                       spacing(f_taus, kPi / 2)};
    const std::vector<int> restricted_coords = {kTheta, kTau};
    const std::vector<int> all_coords = {kTheta, kPhi, kTau};

    std::vector<OptimizationReport> reports(batch.size());
    for (std::size_t k = 0; k < batch.size(); ++k) {
        auto objective = [&](const ModelParams& p) { return batch.evaluate_one(k, p); };
        const Refined local = coordinate_ascent(objective, restricted[k], restricted_coords, step, box);
        const Refined wide = coordinate_ascent(objective, fallback[k], all_coords, f_step, box);

        OptimizationReport& r = reports[k];
        r.spec_name = batch.spec(k).name;
        r.bound = batch.spec(k).upper_bound;
        r.grid = grid;
        r.grid_best_value = restricted[k].value;
        r.fallback_best_value = wide.best.value;
        r.fallback_improved = wide.best.value > local.best.value + kFallbackMargin;
        const Refined& chosen = r.fallback_improved ? wide : local;
        r.best_params = chosen.best.params;
        r.best_value = chosen.best.value;
        r.refinement_iterations = chosen.sweeps;
        r.gradient_norm_at_optimum = gradient_norm(
            objective, r.best_params, r.fallback_improved ? all_coords : restricted_coords, box);
    }
    return reports;
}

OptimizationReport maximize_violation(std::string_view spec_name, double lambda,
                                      const GridResolution& grid, Exec exec) {
    return maximize_violation(std::vector<InequalitySpec>{find_spec(spec_name)}, lambda, grid, exec)
        .front();
}

OptimizationReport maximize_wlgi3_catalog(double lambda, const GridResolution& grid, Exec exec) {
    const auto reports = maximize_violation(wlgi3_catalog(), lambda, grid, exec);
    auto best = reports.begin();
    for (auto it = reports.begin(); it != reports.end(); ++it) {
        if (it->best_value > best->best_value) best = it;
    }
    return *best;
}

Gradient2 stationarity_check(double theta, double tau, double phi) {
    const bool restricted =
        std::abs(phi - kPi / 2) < 1e-9 || std::abs(phi - 3 * kPi / 2) < 1e-9;
    if (!restricted) throw DomainError("stationarity_check requires phi = pi/2 or 3pi/2");
    const InequalitySpec spec = find_spec("wlgi3-4");
    auto f = [&](double th, double ta) { return evaluate(spec, {th, phi, ta, 1.0}).value; };
    return {(f(theta, tau + kFdStep) - f(theta, tau - kFdStep)) / (2 * kFdStep),
            (f(theta + kFdStep, tau) - f(theta - kFdStep, tau)) / (2 * kFdStep)};
}

CriticalLambda critical_lambda(std::string_view spec_name, double theta, double phi, double tau) {
    auto margin = [&](double lambda) {
        return evaluate(spec_name, {theta, phi, tau, lambda}).margin;
    };

    // No root to bracket when the point is never violated.
    if (margin(1.0) <= 0.0) return {1.0, false, false};

    constexpr int kSamples = 100;
    std::array<double, kSamples + 1> profile{};
    for (int k = 1; k <= kSamples; ++k) {
        profile[k] = margin(static_cast<double>(k) / kSamples);
        if (k > 1 && profile[k] < profile[k - 1] - kAlgebraTol) {
            throw NonMonotoneProfileError(std::string(spec_name) +
                                          ": margin is not monotone in lambda at this point; "
                                          "scan the lambda profile instead");
        }
    }

    // Below the first sample the margin is dominated by rounding.
    if (profile[1] > 0.0) return {0.0, true, true};

    int k = 1;
    while (profile[k + 1] <= 0.0) ++k;
    double lo = static_cast<double>(k) / kSamples;
    double hi = static_cast<double>(k + 1) / kSamples;
    // Invariant: margin(lo) <= 0 < margin(hi).
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        (margin(mid) > 0.0 ? hi : lo) = mid;
    }
    return {0.5 * (lo + hi), true, false};
}

double lgi_critical_lambda(int n) {
    if (n < 3) throw DomainError("lgi_critical_lambda requires n >= 3");
    return std::sqrt((n - 2.0) / (n * std::cos(kPi / n)));
}

}  // namespace macroreal
