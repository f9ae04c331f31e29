#include "macroreal/sequences.hpp"

#include <string>
#include <utility>

namespace macroreal {

MeasurementPlan MeasurementPlan::from_params(const ModelParams& params, int n_times) {
    return {n_times, params.tau, params.lambda, params.theta, params.phi};
}

void MeasurementPlan::validate() const {
    if (n_times < 1) throw DomainError("n_times must be >= 1");
    params().validate();
}

EventSpec::EventSpec(std::initializer_list<Measurement> ms)
    : EventSpec(std::vector<Measurement>(ms)) {}

EventSpec::EventSpec(std::vector<Measurement> ms) : measurements_(std::move(ms)) {
    int previous = 0;
    for (const auto& m : measurements_) {
        if (m.time <= previous) {
            throw DomainError("event time indices must be >= 1 and strictly increasing");
        }
        previous = m.time;
    }
}

EventSpec EventSpec::flipped() const {
    std::vector<Measurement> out = measurements_;
    for (auto& m : out) m.outcome = macroreal::flipped(m.outcome);
    return EventSpec(std::move(out));
}

std::string EventSpec::to_string() const {
    std::string s = "P(";
    for (std::size_t k = 0; k < measurements_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(measurements_[k].time);
        s += symbol(measurements_[k].outcome);
    }
    return s + ')';
}

double joint_probability(const MeasurementPlan& plan, const EventSpec& event) {
    if (event.last_time() > plan.n_times) {
        throw DomainError("event " + event.to_string() + " references a time beyond n_times = " +
                          std::to_string(plan.n_times));
    }
    const EffectPair fx = effects(plan.lambda);
    QubitState state = initial_state(plan.theta, plan.phi);
    int now = 1;
    double probability = 1.0;
    for (const auto& m : event.measurements()) {
        if (m.time > now) {
            state = evolve(state, (m.time - now) * plan.tau_step);
            now = m.time;
        }
        LudersResult branch = luders_update(state, fx[m.outcome]);
        if (!branch.post_state) return 0.0;
        probability *= branch.probability;
        state = std::move(*branch.post_state);
    }
    return probability;
}

double single_time_probability(const MeasurementPlan& plan, int time, Outcome outcome) {
    if (time < 1 || time > plan.n_times) throw DomainError("time index out of range");
    const QubitState state = evolve(initial_state(plan.theta, plan.phi), (time - 1) * plan.tau_step);
    return luders_update(state, effects(plan.lambda)[outcome]).probability;
}

double correlation(const MeasurementPlan& plan, int i, int j) {
    if (!(1 <= i && i < j)) throw DomainError("correlation requires 1 <= i < j");
    double c = 0.0;
    for (Outcome a : {Outcome::Plus, Outcome::Minus}) {
        for (Outcome b : {Outcome::Plus, Outcome::Minus}) {
            c += sign_of(a) * sign_of(b) * joint_probability(plan, EventSpec{{i, a}, {j, b}});
        }
    }
    return c;
}

}  // namespace macroreal
