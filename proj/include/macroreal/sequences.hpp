// sequences.hpp
// Sequential measurements at equally spaced times t_1 < t_2 < ... < t_n.

#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "macroreal/qm_core.hpp"

namespace macroreal {

struct MeasurementPlan {
    int n_times = 1;
    double tau_step = 0.0;  // phase accumulated between consecutive times
    double lambda = 1.0;
    double theta = 0.0;
    double phi = 0.0;

    static MeasurementPlan from_params(const ModelParams& params, int n_times);
    ModelParams params() const { return {theta, phi, tau_step, lambda}; }

    void validate() const;
};

// Time indices are 1-based.
struct Measurement {
    int time = 1;
    Outcome outcome = Outcome::Plus;

    friend bool operator==(const Measurement&, const Measurement&) = default;
    friend auto operator<=>(const Measurement& a, const Measurement& b) {
        if (a.time != b.time) return a.time <=> b.time;
        return sign_of(a.outcome) <=> sign_of(b.outcome);
    }
};

// Outcomes demanded at a strictly increasing set of times. Times that are not
// listed are not measured; the system only evolves across them.
class EventSpec {
public:
    EventSpec() = default;
    EventSpec(std::initializer_list<Measurement> ms);
    explicit EventSpec(std::vector<Measurement> ms);

    const std::vector<Measurement>& measurements() const { return measurements_; }
    bool empty() const { return measurements_.empty(); }
    int last_time() const { return measurements_.empty() ? 0 : measurements_.back().time; }

    EventSpec flipped() const;
    std::string to_string() const;  // e.g. "P(2+,3-)"

    friend bool operator==(const EventSpec&, const EventSpec&) = default;
    friend auto operator<=>(const EventSpec&, const EventSpec&) = default;

private:
    std::vector<Measurement> measurements_;
};

// Probability of the whole outcome sequence in one run, propagating the state
// through evolve/luders_update. A null prefix gives 0.
double joint_probability(const MeasurementPlan& plan, const EventSpec& event);

// Probability of `outcome` at `time` when nothing was measured before it.
double single_time_probability(const MeasurementPlan& plan, int time, Outcome outcome);

// <Q_i Q_j> from the four two-time joint probabilities, i < j.
double correlation(const MeasurementPlan& plan, int i, int j);

}  // namespace macroreal
