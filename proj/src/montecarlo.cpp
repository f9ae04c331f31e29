#include "macroreal/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

namespace macroreal {
namespace {

using Tally = std::vector<std::uint64_t>;  // indexed by outcome bits, '+' = 1

void run_chunk(const TrajectoryConfig& config, const EffectPair& fx, const QubitState& start,
               std::uint64_t chunk, Tally& tally) {
    std::mt19937_64 engine(stream_seed(config.rng_seed, config.stream, chunk));
    const std::uint64_t first = chunk * kChunkSamples;
    const std::uint64_t last = std::min(config.n_samples, first + kChunkSamples);
    for (std::uint64_t s = first; s < last; ++s) {
        QubitState state = start;
        int now = 1;
        std::size_t bits = 0;
        for (std::size_t m = 0; m < config.measured_indices.size(); ++m) {
            const int t = config.measured_indices[m];
            if (t > now) {
                state = evolve(state, (t - now) * config.plan.tau_step);
                now = t;
            }
            LudersResult plus = luders_update(state, fx.plus);
            if (to_unit_interval(engine()) < plus.probability && plus.post_state) {
                bits |= std::size_t{1} << m;
                state = std::move(*plus.post_state);
            } else {
                state = luders_update(state, fx.minus).require_post_state();
            }
        }
        ++tally[bits];
    }
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t chunk) {
    return mix64(mix64(mix64(seed) ^ stream) ^ chunk);
}

double to_unit_interval(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

void TrajectoryConfig::validate() const {
    plan.validate();
    if (n_samples < 1) throw DomainError("n_samples must be >= 1");
    if (measured_indices.size() > 20) throw DomainError("at most 20 measured indices");
    int previous = 0;
    for (int t : measured_indices) {
        if (t <= previous || t > plan.n_times) {
            throw DomainError("measured indices must be strictly increasing within [1, n_times]");
        }
        previous = t;
    }
}

OutcomeCounts sample_sequences(const TrajectoryConfig& config, Exec exec) {
    config.validate();
    const EffectPair fx = effects(config.plan.lambda);
    const QubitState start = initial_state(config.plan.theta, config.plan.phi);
    const std::size_t cells = std::size_t{1} << config.measured_indices.size();
    const auto chunks = static_cast<long>((config.n_samples + kChunkSamples - 1) / kChunkSamples);

    Tally total(cells, 0);
    if (exec == Exec::Serial) {
        for (long c = 0; c < chunks; ++c) run_chunk(config, fx, start, c, total);
    } else {
#pragma omp parallel
        {
            Tally local(cells, 0);
#pragma omp for schedule(dynamic, 1) nowait
            for (long c = 0; c < chunks; ++c) run_chunk(config, fx, start, c, local);
#pragma omp critical(macroreal_mc_merge)
            for (std::size_t k = 0; k < cells; ++k) total[k] += local[k];
        }
    }

    OutcomeCounts counts;
    for (std::size_t bits = 0; bits < cells; ++bits) {
        if (total[bits] == 0) continue;
        std::vector<Outcome> key(config.measured_indices.size());
        for (std::size_t m = 0; m < key.size(); ++m) {
            key[m] = (bits >> m) & 1u ? Outcome::Plus : Outcome::Minus;
        }
        counts.emplace(std::move(key), total[bits]);
    }
    return counts;
}

InequalityEstimate estimate_inequality(std::string_view spec_name, const ModelParams& params,
                                       std::uint64_t n_samples, std::uint64_t seed, Exec exec) {
    params.validate();
    const InequalitySpec spec = find_spec(spec_name);
    const MeasurementPlan plan = MeasurementPlan::from_params(params, spec.n_times);

    InequalityEstimate out;
    double variance = 0.0;
    for (std::size_t k = 0; k < spec.terms.size(); ++k) {
        const Term& term = spec.terms[k];
        TrajectoryConfig config{plan, {}, n_samples, seed, k + 1};
        std::vector<Outcome> wanted;
        for (const auto& m : term.event.measurements()) {
            config.measured_indices.push_back(m.time);
            wanted.push_back(m.outcome);
        }
        const OutcomeCounts counts = sample_sequences(config, exec);
        const auto hit = counts.find(wanted);
        const double f = hit == counts.end() ? 0.0 : static_cast<double>(hit->second) / n_samples;
        const double var = f * (1.0 - f) / n_samples;
        out.terms.push_back({term.sign, term.event, f, std::sqrt(var)});
        out.estimate += term.sign * f;
        variance += var;
    }
    out.std_error = std::sqrt(variance);
    return out;
}

}  // namespace macroreal
