#include <gtest/gtest.h>

#include <random>
#include <set>

#include "macroreal/inequalities.hpp"
#include "reference_formulas.hpp"

using namespace macroreal;
namespace ref = macroreal::reference;

namespace {

constexpr Outcome P = Outcome::Plus;
constexpr Outcome M = Outcome::Minus;

const InequalitySpec& by_name(const std::vector<InequalitySpec>& catalog, const std::string& name) {
    for (const auto& s : catalog) {
        if (s.name == name) return s;
    }
    throw std::runtime_error("missing " + name);
}

void expect_terms(const InequalitySpec& spec, const std::vector<std::pair<int, EventSpec>>& want) {
    ASSERT_EQ(spec.terms.size(), want.size()) << spec.name;
    for (std::size_t k = 0; k < want.size(); ++k) {
        EXPECT_EQ(spec.terms[k].sign, want[k].first) << spec.name << " term " << k;
        EXPECT_EQ(spec.terms[k].event, want[k].second) << spec.name << " term " << k;
    }
}

}  // namespace

TEST(Wlgi3Catalog, ShapeAndNames) {
    const auto catalog = wlgi3_catalog();
    ASSERT_EQ(catalog.size(), 24u);
    std::set<std::string> names;
    for (const auto& s : catalog) {
        names.insert(s.name);
        EXPECT_EQ(s.n_times, 3);
        EXPECT_EQ(s.upper_bound, 0.0);
        EXPECT_FALSE(s.lower_bound.has_value());
        ASSERT_EQ(s.terms.size(), 3u);
        EXPECT_EQ(s.terms[0].sign, +1);
        EXPECT_EQ(s.terms[1].sign, -1);
        EXPECT_EQ(s.terms[2].sign, -1);
        EXPECT_NO_THROW(s.validate());
    }
    EXPECT_EQ(names.size(), 24u);
    for (const char* n : {"wlgi3-4", "wlgi3-5a", "wlgi3-5k", "wlgi3-4-flipped", "wlgi3-5k-flipped"}) {
        EXPECT_TRUE(names.count(n)) << n;
    }
}

TEST(Wlgi3Catalog, ListedEntries) {
    const auto catalog = wlgi3_catalog();
    expect_terms(by_name(catalog, "wlgi3-4"),
                 {{+1, EventSpec{{2, P}, {3, M}}}, {-1, EventSpec{{1, P}, {2, P}}}, {-1, EventSpec{{1, M}, {3, M}}}});
    expect_terms(by_name(catalog, "wlgi3-5a"),
                 {{+1, EventSpec{{2, P}, {3, P}}}, {-1, EventSpec{{1, M}, {2, P}}}, {-1, EventSpec{{1, P}, {3, P}}}});
    expect_terms(by_name(catalog, "wlgi3-4-flipped"),
                 {{+1, EventSpec{{2, M}, {3, P}}}, {-1, EventSpec{{1, M}, {2, M}}}, {-1, EventSpec{{1, P}, {3, P}}}});
}

TEST(WlgiN, Structure) {
    expect_terms(wlgi_n(3),
                 {{+1, EventSpec{{1, P}, {3, M}}}, {-1, EventSpec{{1, P}, {2, M}}}, {-1, EventSpec{{2, P}, {3, M}}}});
    const InequalitySpec four = wlgi_n(4);
    EXPECT_EQ(four.terms.size(), 4u);  // leading term + 3 chain terms
    EXPECT_EQ(four.upper_bound, 0.0);
    EXPECT_EQ(four.name, "wlgi-n:4");
    EXPECT_THROW(wlgi_n(2), DomainError);
}

TEST(FindSpec, ResolvesStableNames) {
    EXPECT_EQ(find_spec("wlgi3-5d").name, "wlgi3-5d");
    EXPECT_EQ(find_spec("wlgi3-5d-flipped").name, "wlgi3-5d-flipped");
    EXPECT_EQ(find_spec("wlgi-n:6").n_times, 6);
    EXPECT_EQ(find_spec("lgi:5").terms.size(), 20u);
    EXPECT_EQ(find_spec("nsit").n_times, 2);
    EXPECT_THROW(find_spec("wlgi3-9"), UnknownSpecError);
    EXPECT_THROW(find_spec("lgi:"), UnknownSpecError);
    EXPECT_THROW(find_spec("lgi:3x"), UnknownSpecError);
    EXPECT_THROW(find_spec(""), UnknownSpecError);
}

TEST(Evaluate, SharpMaximumAtReferencePoint) {
    const ViolationResult r = evaluate("wlgi3-4", {1.0666, kPi / 2, 1.0083, 1.0});
    EXPECT_NEAR(r.value, 0.5043, 1e-4);
    EXPECT_EQ(r.bound, 0.0);
    EXPECT_EQ(r.margin, r.value - r.bound);
}

TEST(Evaluate, GroundStateNeverViolatesWlgi4) {
    for (int k = 0; k <= 1000; ++k) {
        const double tau = kPi * k / 1000.0;
        EXPECT_LE(evaluate("wlgi3-4", {0.0, 1.1, tau, 1.0}).value, kPipelineTol) << tau;
    }
}

TEST(Evaluate, MatchesSharpClosedFormOnGrid) {
    const InequalitySpec spec = find_spec("wlgi3-4");
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            for (int k = 0; k < 20; ++k) {
                const double th = kPi / 2 * i / 19, ph = 2 * kPi * j / 19, tau = kPi * k / 19;
                EXPECT_NEAR(evaluate(spec, {th, ph, tau, 1.0}).value, ref::sharp_wlgi4(th, ph, tau),
                            kPipelineTol);
            }
        }
    }
}

TEST(Evaluate, PrintedLambdaPolynomialAtRoundedPoint) {
    for (int k = 10; k <= 100; ++k) {
        const double lambda = k / 100.0;
        EXPECT_NEAR(evaluate("wlgi3-4", {1.0666, kPi / 2, 1.0083, lambda}).value,
                    ref::printed_lambda_profile(lambda), 2e-3)
            << lambda;
    }
}

TEST(Evaluate, OptimalPhaseFollowsSignOfSin2Tau) {
    for (int k = 1; k < 200; ++k) {
        const double tau = kPi * k / 200.0;
        if (std::abs(std::sin(2 * tau)) < 1e-9) continue;
        for (double th : {0.3, 0.8, 1.0666, 1.4}) {
            const double quarter = evaluate("wlgi3-4", {th, kPi / 2, tau, 1.0}).value;
            const double three_quarter = evaluate("wlgi3-4", {th, 3 * kPi / 2, tau, 1.0}).value;
            if (std::sin(2 * tau) > 0) {
                EXPECT_GE(quarter, three_quarter) << tau;
            } else {
                EXPECT_GE(three_quarter, quarter) << tau;
            }
        }
    }
}

TEST(LgiKn, Examples) {
    const ViolationResult k3 = lgi_kn(3, {0.0, 0.0, kPi / 6, 1.0});
    EXPECT_NEAR(k3.value, 1.5, kPipelineTol);
    EXPECT_NEAR(k3.margin, 0.5, kPipelineTol);
    const ViolationResult k4 = lgi_kn(4, {0.0, 0.0, kPi / 8, 1.0});
    EXPECT_NEAR(k4.value, 4 * std::cos(kPi / 4), kPipelineTol);
    EXPECT_NEAR(k4.margin, 4 * std::cos(kPi / 4) - 2, kPipelineTol);
    EXPECT_THROW(lgi_kn(2, {}), DomainError);
    EXPECT_EQ(lgi_lower_bound(3), -3.0);
    EXPECT_EQ(lgi_lower_bound(4), -2.0);
}

TEST(LgiKn, ScalesWithLambdaSquaredAndMatchesEventExpansion) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const ModelParams p{u(rng) * kPi / 2, u(rng) * 2 * kPi, u(rng) * kPi, 0.05 + 0.95 * u(rng)};
        ModelParams sharp = p;
        sharp.lambda = 1.0;
        for (int n = 3; n <= 7; ++n) {
            const double kn = lgi_kn(n, p).value;
            EXPECT_NEAR(kn, p.lambda * p.lambda * lgi_kn(n, sharp).value, kPipelineTol);
            EXPECT_NEAR(kn, p.lambda * p.lambda * ref::sharp_kn(n, p.tau), kPipelineTol);
            EXPECT_NEAR(kn, evaluate(lgi_spec(n), p).value, kPipelineTol);
        }
    }
}

TEST(NsitDelta, Examples) {
    EXPECT_NEAR(nsit_delta({kPi / 4, kPi / 2, kPi / 4, 1.0}), 0.5, kPipelineTol);
    EXPECT_NEAR(nsit_delta({kPi / 4, kPi / 2, kPi / 4, 0.6}), 0.06, kPipelineTol);
    for (double ph : {0.0, 1.0, 4.0}) {
        for (double tau : {0.2, 1.3}) {
            for (double l : {0.1, 0.7, 1.0}) EXPECT_NEAR(nsit_delta({0.0, ph, tau, l}), 0.0, kPipelineTol);
        }
    }
}

TEST(NsitDelta, MatchesClosedFormAndNeverVanishesGenerically) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        const ModelParams p{u(rng) * kPi / 2, u(rng) * 2 * kPi, u(rng) * kPi, 0.05 + 0.95 * u(rng)};
        const double d = nsit_delta(p);
        EXPECT_NEAR(d, ref::nsit(p.theta, p.phi, p.tau, p.lambda), kPipelineTol);
        EXPECT_NEAR(d, evaluate(nsit_spec(), p).value, kPipelineTol);
        const double generic = std::sin(2 * p.theta) * std::sin(p.phi) * std::sin(2 * p.tau);
        if (std::abs(generic) > 1e-3) EXPECT_NE(d, 0.0);
    }
}
