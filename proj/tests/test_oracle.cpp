#include <gtest/gtest.h>

#include <random>

#include "macroreal/oracle.hpp"

using namespace macroreal;

namespace {

constexpr Outcome P = Outcome::Plus;
constexpr Outcome M = Outcome::Minus;

}  // namespace

TEST(Assignment, BitLayout) {
    const Assignment a = Assignment::from_outcomes({P, M, P});
    EXPECT_EQ(a.bits, 0b101u);
    EXPECT_EQ(a.at(1), P);
    EXPECT_EQ(a.at(2), M);
    EXPECT_EQ(a.outcomes(), (std::vector<Outcome>{P, M, P}));
}

TEST(ClassicalValue, Wlgi4OnVertices) {
    const InequalitySpec spec = find_spec("wlgi3-4");
    EXPECT_EQ(classical_value(spec, Assignment::from_outcomes({M, M, M})), -1);
    EXPECT_EQ(classical_value(spec, Assignment::from_outcomes({P, P, M})), 0);
}

TEST(ClassicalMax, Examples) {
    EXPECT_EQ(classical_max(find_spec("wlgi3-4")), 0);
    EXPECT_EQ(classical_max(lgi_spec(3)), 1);
    EXPECT_EQ(classical_max(wlgi_n(5)), 0);
    EXPECT_EQ(classical_min(lgi_spec(4)), -2);
    EXPECT_EQ(classical_min(lgi_spec(3)), -3);
}

TEST(ClassicalMax, NsitIsAnIdentityForMacrorealistModels) {
    EXPECT_EQ(classical_max(nsit_spec()), 0);
    EXPECT_EQ(classical_min(nsit_spec()), 0);
}

TEST(ClassicalMax, EnumerationGuard) {
    EXPECT_NO_THROW(classical_max(wlgi_n(kMaxEnumerationTimes), Exec::Parallel));
    EXPECT_THROW(classical_max(wlgi_n(kMaxEnumerationTimes + 1)), ResourceError);
}

TEST(ClassicalMax, InvariantUnderGlobalOutcomeFlip) {
    for (const auto& spec : wlgi3_catalog()) {
        EXPECT_EQ(classical_max(spec), classical_max(spec.flipped())) << spec.name;
    }
    for (int n = 3; n <= 9; ++n) {
        EXPECT_EQ(classical_max(wlgi_n(n)), classical_max(wlgi_n(n).flipped()));
        EXPECT_EQ(classical_max(lgi_spec(n)), classical_max(lgi_spec(n).flipped()));
        EXPECT_EQ(classical_min(lgi_spec(n)), classical_min(lgi_spec(n).flipped()));
    }
}

TEST(ClassicalMax, RandomSpecsSerialAgreesWithParallel) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + trial % 10;
        InequalitySpec spec{"random", n, {}, 0.0, std::nullopt};
        for (int k = 0; k < 6; ++k) {
            std::vector<Measurement> ms;
            for (int t = 1; t <= n; ++t) {
                if (coin(rng)) ms.push_back({t, coin(rng) ? P : M});
            }
            spec.terms.push_back({coin(rng) ? 1 : -1, EventSpec(ms)});
        }
        EXPECT_EQ(classical_max(spec, Exec::Serial), classical_max(spec, Exec::Parallel));
        EXPECT_EQ(classical_min(spec, Exec::Serial), classical_min(spec, Exec::Parallel));
    }
}

TEST(ResidualTerms, ThreeTimesHandEnumeration) {
    const ResidualTerms r = residual_terms(3);
    EXPECT_EQ(r.total, 2);
    const auto support = r.support();
    ASSERT_EQ(support.size(), 2u);
    // (-,+,-) has bits 0b010, (+,-,+) has bits 0b101.
    EXPECT_EQ(support[0], Assignment::from_outcomes({M, P, M}));
    EXPECT_EQ(support[1], Assignment::from_outcomes({P, M, P}));
    for (const auto& v : support) EXPECT_EQ(r.coefficients[v.bits], 1);
}

TEST(ResidualTerms, CountsAndSignsForAllSizes) {
    EXPECT_EQ(residual_terms(4).total, 8);
    EXPECT_EQ(residual_terms(5).total, 24);
    for (int n = 3; n <= kMaxResidualTimes; ++n) {
        const ResidualTerms r = residual_terms(n);
        EXPECT_TRUE(r.all_non_negative()) << n;
        EXPECT_EQ(r.total, std::int64_t{n - 2} << (n - 2)) << n;
    }
    EXPECT_THROW(residual_terms(2), DomainError);
    EXPECT_THROW(residual_terms(kMaxResidualTimes + 1), DomainError);
}

TEST(Certify, FullCatalogPasses) {
    const CertificationReport report = certify_catalog();
    EXPECT_TRUE(report.all_pass());
    EXPECT_EQ(report.wlgi3.size(), 24u);
    EXPECT_EQ(report.wlgi_n.size(), 6u);
    EXPECT_EQ(report.lgi.size(), 6u);
    for (const auto& e : report.wlgi3) EXPECT_TRUE(e.tight) << e.name;
    for (const auto& e : report.lgi) EXPECT_TRUE(e.tight) << e.name;
    EXPECT_EQ(report.summary(),
              "24/24 WLGI-3 certified, wlgi-n 3..8 certified, lgi 3..8 bounds certified");
}

TEST(Certify, LgiFourLowerBound) {
    const CertificationEntry e = certify(lgi_spec(4));
    EXPECT_TRUE(e.pass);
    ASSERT_TRUE(e.classical_min.has_value());
    EXPECT_EQ(*e.classical_min, -2);
    EXPECT_EQ(*e.declared_lower, -2);
}

TEST(Certify, CorruptedSpecFails) {
    // One outcome reversed in the leading term: +P(2-,3-) - P(1+,2+) - P(1-,3-).
    InequalitySpec broken = find_spec("wlgi3-4");
    broken.name = "wlgi3-4-corrupted";
    broken.terms[0].event = EventSpec{{2, M}, {3, M}};
    const CertificationEntry e = certify(broken);
    EXPECT_FALSE(e.pass);
    EXPECT_EQ(e.classical_max, 1);
}

TEST(Certify, RejectsNonIntegralBounds) {
    InequalitySpec spec = find_spec("wlgi3-4");
    spec.upper_bound = 0.5;
    EXPECT_THROW(certify(spec), DomainError);
}
