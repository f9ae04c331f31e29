// montecarlo.hpp
// Trajectory sampling of sequential unsharp measurements.
//
// Random streams: samples are processed in chunks of kChunkSamples. Chunk c of
// stream s under seed S draws from std::mt19937_64 seeded with
// stream_seed(S, s, c), and each outcome uses one 64-bit draw u via
// (u >> 11) * 2^-53 < P(+). Counts are therefore identical for the serial and
// parallel paths and for any worker count.

#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "macroreal/inequalities.hpp"
#include "macroreal/parallel.hpp"
#include "macroreal/sequences.hpp"

namespace macroreal {

inline constexpr std::uint64_t kChunkSamples = 1u << 16;

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t chunk);

// Uniform double in [0, 1) with 53 random bits.
double to_unit_interval(std::uint64_t bits);

struct TrajectoryConfig {
    MeasurementPlan plan;
    std::vector<int> measured_indices;  // strictly increasing, 1-based
    std::uint64_t n_samples = 1;
    std::uint64_t rng_seed = 0;
    std::uint64_t stream = 0;  // sub-ensemble label

    void validate() const;
};

using OutcomeCounts = std::map<std::vector<Outcome>, std::uint64_t>;

OutcomeCounts sample_sequences(const TrajectoryConfig& config, Exec exec = Exec::Parallel);

struct TermEstimate {
    int sign = +1;
    EventSpec event;
    double frequency = 0.0;
    double std_error = 0.0;  // sqrt(f (1 - f) / N)
};

struct InequalityEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::vector<TermEstimate> terms;
};

// Each term is estimated on its own sub-ensemble (stream = term index + 1),
// so the standard errors add in quadrature.
InequalityEstimate estimate_inequality(std::string_view spec_name, const ModelParams& params,
                                       std::uint64_t n_samples, std::uint64_t seed,
                                       Exec exec = Exec::Parallel);

}  // namespace macroreal
