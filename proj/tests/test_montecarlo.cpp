#include <gtest/gtest.h>

#include <cmath>

#include "macroreal/montecarlo.hpp"
#include "reference_formulas.hpp"

using namespace macroreal;
namespace ref = macroreal::reference;

namespace {

constexpr Outcome P = Outcome::Plus;
constexpr Outcome M = Outcome::Minus;

// |f - p| <= k sigma with sigma = sqrt(p (1 - p) / N).
void expect_within_sigmas(double frequency, double p, std::uint64_t n, double k) {
    const double sigma = std::sqrt(p * (1 - p) / n);
    EXPECT_LE(std::abs(frequency - p), k * sigma + 1e-15) << "f=" << frequency << " p=" << p;
}

std::uint64_t count_of(const OutcomeCounts& c, std::vector<Outcome> key) {
    auto it = c.find(key);
    return it == c.end() ? 0 : it->second;
}

}  // namespace

TEST(Rng, StreamsAreDistinctAndDeterministic) {
    EXPECT_EQ(stream_seed(1, 2, 3), stream_seed(1, 2, 3));
    EXPECT_NE(stream_seed(1, 2, 3), stream_seed(1, 3, 3));
    EXPECT_NE(stream_seed(1, 2, 3), stream_seed(1, 2, 4));
    EXPECT_NE(stream_seed(1, 2, 3), stream_seed(2, 2, 3));
    EXPECT_EQ(to_unit_interval(0), 0.0);
    EXPECT_LT(to_unit_interval(~std::uint64_t{0}), 1.0);
}

TEST(SampleSequences, CertainOutcome) {
    const TrajectoryConfig config{{1, 0.0, 1.0, 0.0, 0.0}, {1}, 10000, 42, 0};
    const OutcomeCounts counts = sample_sequences(config);
    ASSERT_EQ(counts.size(), 1u);
    EXPECT_EQ(count_of(counts, {P}), 10000u);
}

TEST(SampleSequences, SharpPairMatchesClosedForm) {
    const std::uint64_t n = 1000000;
    const TrajectoryConfig config{{2, 1.0083, 1.0, 1.0666, kPi / 2}, {1, 2}, n, 7, 0};
    const OutcomeCounts counts = sample_sequences(config);
    std::uint64_t total = 0;
    for (const auto& [k, v] : counts) total += v;
    EXPECT_EQ(total, n);
    expect_within_sigmas(static_cast<double>(count_of(counts, {P, P})) / n,
                         ref::sharp_plus_plus(1.0666, 1.0083), n, 4.0);
}

TEST(SampleSequences, UnsharpPairsMatchAnalyticEngine) {
    const std::uint64_t n = 400000;
    const MeasurementPlan plan{3, 1.0083, 0.7, 1.0666, kPi / 2};
    for (auto idx : {std::vector<int>{1, 2}, std::vector<int>{2, 3}, std::vector<int>{1, 3}}) {
        const OutcomeCounts counts = sample_sequences({plan, idx, n, 11, 0});
        for (Outcome a : {P, M}) {
            for (Outcome b : {P, M}) {
                const double p = joint_probability(plan, EventSpec{{idx[0], a}, {idx[1], b}});
                expect_within_sigmas(static_cast<double>(count_of(counts, {a, b})) / n, p, n, 5.0);
            }
        }
    }
}

TEST(SampleSequences, DeterministicAndIndependentOfExecution) {
    const TrajectoryConfig config{{3, 0.8, 0.6, 0.9, 1.0}, {1, 2, 3}, 300001, 99, 5};
    const OutcomeCounts serial = sample_sequences(config, Exec::Serial);
    EXPECT_EQ(serial, sample_sequences(config, Exec::Serial));
    EXPECT_EQ(serial, sample_sequences(config, Exec::Parallel));
    set_worker_count(3);
    EXPECT_EQ(serial, sample_sequences(config, Exec::Parallel));
    set_worker_count(0);
    TrajectoryConfig other = config;
    other.rng_seed = 100;
    EXPECT_NE(serial, sample_sequences(other));
}

TEST(SampleSequences, RejectsBadConfig) {
    const MeasurementPlan plan{3, 0.8, 0.6, 0.9, 1.0};
    EXPECT_THROW(sample_sequences({plan, {2, 1}, 10, 1, 0}), DomainError);
    EXPECT_THROW(sample_sequences({plan, {4}, 10, 1, 0}), DomainError);
    EXPECT_THROW(sample_sequences({plan, {1}, 0, 1, 0}), DomainError);
}

TEST(EstimateInequality, Wlgi4AtSharpOptimum) {
    const ModelParams p{1.0666, kPi / 2, 1.0083, 1.0};
    const InequalityEstimate est = estimate_inequality("wlgi3-4", p, 1000000, 2024);
    EXPECT_LT(est.std_error, 0.002);
    EXPECT_LE(std::abs(est.estimate - evaluate("wlgi3-4", p).value), 4 * est.std_error);
    ASSERT_EQ(est.terms.size(), 3u);
}

TEST(EstimateInequality, NsitSharpAndUnsharp) {
    const ModelParams sharp{kPi / 4, kPi / 2, kPi / 4, 1.0};
    const InequalityEstimate s = estimate_inequality("nsit", sharp, 1000000, 5);
    EXPECT_LE(std::abs(s.estimate - 0.5), 4 * s.std_error);

    const ModelParams weak{kPi / 4, kPi / 2, kPi / 4, 0.05};
    const InequalityEstimate w = estimate_inequality("nsit", weak, 1000000, 5);
    EXPECT_LE(std::abs(w.estimate - ref::nsit(kPi / 4, kPi / 2, kPi / 4, 0.05)), 4 * w.std_error);
}

TEST(EstimateInequality, TermsUseDisjointStreams) {
    // Terms 2 and 3 of nsit both measure times {1, 2}; each has its own stream.
    const ModelParams p{0.7, 1.0, 0.9, 0.8};
    const std::uint64_t n = 20000;
    const InequalityEstimate est = estimate_inequality("nsit", p, n, 3);
    ASSERT_EQ(est.terms.size(), 3u);
    const MeasurementPlan plan = MeasurementPlan::from_params(p, 2);
    const OutcomeCounts second = sample_sequences({plan, {1, 2}, n, 3, 2});
    const OutcomeCounts third = sample_sequences({plan, {1, 2}, n, 3, 3});
    EXPECT_NE(second, third);
    EXPECT_EQ(est.terms[1].frequency, static_cast<double>(count_of(second, {P, P})) / n);
    EXPECT_EQ(est.terms[2].frequency, static_cast<double>(count_of(third, {M, P})) / n);
    EXPECT_THROW(estimate_inequality("bogus", p, 10, 1), UnknownSpecError);
}
