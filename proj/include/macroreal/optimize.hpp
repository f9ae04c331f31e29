// optimize.hpp
// Violation maximization over (theta, phi, tau) at fixed sharpness, and
// critical-sharpness solving.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "macroreal/inequalities.hpp"
#include "macroreal/parallel.hpp"

namespace macroreal {

class NonMonotoneProfileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// theta spans [0, pi/2] inclusive; tau spans the open interval (0, pi).
// The restricted search uses phi in {pi/2, 3pi/2}; the fallback sweep covers
// phi in [0, 2pi) on a coarser (theta, tau) lattice.
struct GridResolution {
    int theta = 181;
    int tau = 629;
    int fallback_theta = 37;
    int fallback_phi = 64;
    int fallback_tau = 127;
};

struct OptimizationReport {
    std::string spec_name;
    ModelParams best_params;
    double best_value = 0.0;
    double bound = 0.0;
    GridResolution grid;
    int refinement_iterations = 0;
    double gradient_norm_at_optimum = 0.0;
    double grid_best_value = 0.0;      // best restricted-grid sample before refinement
    double fallback_best_value = 0.0;  // refined best of the full-phi sweep
    bool fallback_improved = false;    // full-phi sweep beat the restricted search

    double margin() const { return best_value - bound; }
};

// A point of the search space together with its objective value.
struct Candidate {
    ModelParams params;
    double value = 0.0;
};

// Total order used by every reduction: larger value first, then the
// lexicographically smaller (theta, phi, tau).
bool better(const Candidate& a, const Candidate& b);

// Specs evaluated together share their distinct event probabilities.
class SpecBatch {
public:
    explicit SpecBatch(std::vector<InequalitySpec> specs);

    std::size_t size() const { return specs_.size(); }
    const InequalitySpec& spec(std::size_t k) const { return specs_[k]; }
    std::size_t distinct_events() const { return events_.size(); }

    // Writes one value per spec into `values` (size() entries).
    void evaluate(const ModelParams& params, std::vector<double>& values,
                  std::vector<double>& scratch) const;
    double evaluate_one(std::size_t k, const ModelParams& params) const;

private:
    struct IndexedTerm {
        int sign;
        std::size_t event;
    };
    std::vector<InequalitySpec> specs_;
    std::vector<EventSpec> events_;
    std::vector<std::vector<IndexedTerm>> terms_;
    int n_times_ = 1;
};

// Best sample per spec over the Cartesian grid thetas x phis x taus.
std::vector<Candidate> grid_search(const SpecBatch& batch, double lambda,
                                   const std::vector<double>& thetas,
                                   const std::vector<double>& phis,
                                   const std::vector<double>& taus, Exec exec = Exec::Parallel);

std::vector<double> theta_axis(int points);
std::vector<double> tau_axis(int points);
std::vector<double> phi_axis(int points);

OptimizationReport maximize_violation(std::string_view spec_name, double lambda,
                                      const GridResolution& grid = {},
                                      Exec exec = Exec::Parallel);

// One report per spec, sharing grid passes.
std::vector<OptimizationReport> maximize_violation(const std::vector<InequalitySpec>& specs,
                                                   double lambda, const GridResolution& grid = {},
                                                   Exec exec = Exec::Parallel);

// Largest best_value over the 24 three-term Wigner-form inequalities.
OptimizationReport maximize_wlgi3_catalog(double lambda, const GridResolution& grid = {},
                                          Exec exec = Exec::Parallel);

struct Gradient2 {
    double d_tau = 0.0;
    double d_theta = 0.0;
};

// Central differences (step 1e-6) of the sharp wlgi3-4 left-hand side.
// phi must be pi/2 or 3pi/2.
Gradient2 stationarity_check(double theta, double tau, double phi);

struct CriticalLambda {
    double lambda = 1.0;
    bool violated_at_one = true;   // false: never violated, lambda reported as 1
    bool violated_always = false;  // true: violated at every sample down to 0.01, reported as 0
};

// Root of value(lambda) = 0 on (0, 1] at a fixed point, by bisection to 1e-9.
// Points not violated at lambda = 1 return 1; otherwise the profile is
// checked for monotonicity on 100 samples first.
CriticalLambda critical_lambda(std::string_view spec_name, double theta, double phi, double tau);

// sqrt((n - 2) / (n cos(pi / n))).
double lgi_critical_lambda(int n);

}  // namespace macroreal
