#include <gtest/gtest.h>

#include "mds/linkage.hpp"
#include "oracles.hpp"

using namespace mds;
using namespace mds::linkage;

namespace
{
SkewLinkageSpec spec(long n1, long n2, std::vector<CurveNumerics> comps)
{
    return SkewLinkageSpec::from_numerics(n1, n2, comps);
}
} // namespace

TEST(Linkage, LinkedNumerics)
{
    EXPECT_EQ(linked_numerics(23, 14, 4, 5), (LinkedNumerics{3, 6}));
    EXPECT_EQ(linked_numerics(3, 6, 3, 3), (LinkedNumerics{0, 3}));
    EXPECT_EQ(linked_numerics(0, 3, 2, 2), (LinkedNumerics{0, 1}));
    EXPECT_EQ(linked_numerics(2, 5, 5, 5), (LinkedNumerics{47, 20}));
    EXPECT_THROW(linked_numerics(0, 20, 4, 5), InvalidArgument);
    EXPECT_THROW(linked_numerics(0, 0, 4, 5), InvalidArgument);
    EXPECT_THROW(linked_numerics(0, 3, 0, 5), InvalidArgument);
}

TEST(Linkage, Rigidity)
{
    const auto a = rigidity(spec(5, 5, {{2, 5}}));
    EXPECT_EQ(a.rigidity, RigidityClass::SuperRigid);
    EXPECT_EQ(a.e, std::vector<Integer>{-3});
    EXPECT_TRUE(a.balanced);
    const auto b = rigidity(spec(4, 5, {{3, 6}}));
    EXPECT_EQ(b.rigidity, RigidityClass::NotRigid);
    EXPECT_EQ(b.e, std::vector<Integer>{4});
    EXPECT_EQ(rigidity(spec(4, 4, {{0, 1}})).rigidity, RigidityClass::SuperRigid);
    EXPECT_EQ(rigidity(spec(4, 9, {{1, 3}})).rigidity, RigidityClass::Rigid);
}

TEST(Linkage, SpecValidation)
{
    EXPECT_THROW(spec(5, 4, {{0, 1}}), InvalidArgument);
    EXPECT_THROW(spec(5, 5, {}), InvalidArgument);
    EXPECT_THROW(spec(2, 2, {{0, 2}, {0, 2}}), InvalidArgument);
    EXPECT_THROW(SkewLinkageSpec(5, 5, {{CurveNumerics(2, 5), false, Integer(7)}}), InvalidArgument);
    const auto s = spec(5, 5, {{0, 1}, {3, 4}});
    EXPECT_EQ(s.components[0].qcanonical, std::optional<bool>(true));
    EXPECT_FALSE(s.components[1].qcanonical.has_value());
}

TEST(Linkage, Chambers)
{
    const auto a = chambers(spec(5, 5, {{0, 1}, {1, 4}}));
    ASSERT_EQ(a.partition.size(), 2u);
    EXPECT_EQ(a.partition[0], std::vector<std::size_t>{0});
    EXPECT_EQ(a.partition[1], std::vector<std::size_t>{1});
    EXPECT_EQ(a.ratios, (std::vector<Rational>{-3, -1}));
    EXPECT_EQ(a.end_contraction, blowup::EndContraction::FibrationToP1);

    const auto b = chambers(spec(5, 5, {{0, 2}, {0, 2}}));
    ASSERT_EQ(b.partition.size(), 1u);
    EXPECT_EQ(b.partition[0], (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(b.walls.size(), 1u);

    EXPECT_EQ(chambers(spec(4, 4, {{0, 1}})).partition.size(), 1u);
    EXPECT_THROW(chambers(spec(4, 5, {{3, 6}})), NotRigid);
    EXPECT_EQ(chambers(spec(4, 9, {{1, 3}})).end_contraction, blowup::EndContraction::Divisorial);
    EXPECT_EQ(chambers(spec(4, 9, {{0, 1}})).end_contraction, blowup::EndContraction::DivisorialToPoint);
}

TEST(Linkage, WallSequenceOrder)
{
    const auto ch = chambers(spec(5, 5, {{0, 1}, {1, 4}}));
    const auto seq = ch.wall_sequence(5, 5);
    std::vector<std::string> names;
    for (const auto &[n, c] : seq) {
        names.push_back(n);
    }
    EXPECT_EQ(names, (std::vector<std::string>{"E", "H", "D_1", "D_2", "S_2", "S_1"}));
    // Consecutive divisors turn one way from E towards S_2; S_2 = S_1 when balanced.
    for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
        EXPECT_LT(blowup::det(seq[i].second, seq[i + 1].second).sign(), 0) << names[i];
    }
}

TEST(Linkage, QcanonicalGenericity)
{
    const auto a = qcanonical_genericity(2, 5);
    EXPECT_TRUE(a.applicable);
    EXPECT_EQ(a.range, GenericityCase::AboveCanonical);
    ASSERT_EQ(a.bounds.size(), 1u);
    EXPECT_EQ(a.bounds[0].value, 18);
    EXPECT_EQ(a.four_d, 20);

    const auto b = qcanonical_genericity(3, 4);
    EXPECT_FALSE(b.applicable);
    EXPECT_TRUE(b.exceptional);

    const auto c = qcanonical_genericity(4, 8);
    EXPECT_EQ(c.range, GenericityCase::AboveCanonical);
    EXPECT_EQ(c.bounds[0].value, 28);
    EXPECT_TRUE(c.applicable);

    const auto d = qcanonical_genericity(5, 8);
    EXPECT_EQ(d.range, GenericityCase::Canonical);
    EXPECT_EQ(d.bounds[0].value, 31);
    EXPECT_TRUE(d.applicable);

    EXPECT_FALSE(qcanonical_genericity(10, 5).applicable);
    EXPECT_THROW(qcanonical_genericity(1, 5), InvalidArgument);
}

TEST(Linkage, MainTheoremCheck)
{
    const auto a = main_theorem_check(2, 5, 5, 5, true);
    EXPECT_TRUE(a.hypotheses_ok);
    EXPECT_EQ(*a.result, (LinkedNumerics{47, 20}));
    EXPECT_EQ(a.verdict_fragment, "NotMDS for very general element");

    const auto b = main_theorem_check(3, 4, 6, 6, true);
    EXPECT_FALSE(b.hypotheses_ok);
    EXPECT_EQ(violated_names(b.hypotheses), std::vector<std::string>{"non-Q-canonical curves are very general"});

    const auto c = main_theorem_check(2, 5, 4, 4, true);
    EXPECT_FALSE(c.hypotheses_ok);
    EXPECT_EQ(violated_names(c.hypotheses),
              (std::vector<std::string>{"super-rigid for n1: 2g' - 2 - (n1 - 4)d' < 0",
                                        "super-rigid for n2: 2g' - 2 - (n2 - 4)d' < 0"}));

    const auto d = main_theorem_check(2, 5, 5, 5, false);
    EXPECT_FALSE(d.hypotheses_ok);
    const auto e = main_theorem_check(2, 5, 7, 7, false);
    EXPECT_TRUE(e.hypotheses_ok);
    EXPECT_NE(e.hypotheses[3].detail.find("sufficient, not necessary"), std::string::npos);
}

TEST(Linkage, RestrictionCoefficients)
{
    EXPECT_EQ(restriction_coefficients(1, 0, 5), (std::pair<Rational, Rational>{1, 0}));
    EXPECT_EQ(restriction_coefficients(0, 1, 4), (std::pair<Rational, Rational>{0, 1}));
    EXPECT_EQ(restriction_coefficients(3, 2, 5), (std::pair<Rational, Rational>{1, 2}));
}

TEST(Linkage, PotentialContractibility)
{
    const auto a = potential_contractibility_conditions(spec(5, 5, {{0, 1}}));
    EXPECT_EQ(a.overall, ConditionStatus::Satisfied);
    EXPECT_EQ(a.components[0].inequality_value, -5);

    const auto b = potential_contractibility_conditions(
        SkewLinkageSpec(4, 9, {{CurveNumerics(1, 3), true, std::nullopt}}));
    EXPECT_EQ(b.overall, ConditionStatus::Violated);

    const auto c = potential_contractibility_conditions(
        SkewLinkageSpec(5, 5, {{CurveNumerics(2, 5), false, std::nullopt}}));
    EXPECT_EQ(c.overall, ConditionStatus::Violated);

    const auto d = potential_contractibility_conditions(spec(5, 5, {{2, 5}}));
    EXPECT_EQ(d.overall, ConditionStatus::MissingFlag);

    // Rigid top block with K ~ (n2 - 4)H: a plane cubic (g = 1, d = 3) linked by (4, 4)... e = 0.
    const auto e = potential_contractibility_conditions(
        SkewLinkageSpec(4, 4, {{CurveNumerics(1, 3), true, Integer(0)}}));
    EXPECT_EQ(e.overall, ConditionStatus::Satisfied);
    EXPECT_EQ(e.top_branch, "subcanonical");
}

TEST(LinkageProperty, InvolutionAndDegreeConservation)
{
    oracle::Gen gen(17);
    for (int i = 0; i < 2000; ++i) {
        const long n1 = gen.uniform(1, 9);
        const long n2 = gen.uniform(n1, 10);
        if (n1 * n2 < 2) {
            continue;
        }
        const long d = gen.uniform(1, n1 * n2 - 1);
        const long g = gen.uniform(0, 80);
        // d - d' is odd only when n1 n2 is odd, and then n1 + n2 - 4 is even.
        const auto l = linked_numerics(g, d, n1, n2);
        EXPECT_EQ(l.degree + d, n1 * n2);
        const auto back = linked_numerics(l.genus, l.degree, n1, n2);
        EXPECT_EQ(back, (LinkedNumerics{g, d}));
    }
}

TEST(LinkageProperty, ChamberPartition)
{
    oracle::Gen gen(19);
    int tested = 0;
    while (tested < 500) {
        const long n1 = gen.uniform(3, 9);
        const long n2 = gen.uniform(n1, 10);
        std::vector<CurveNumerics> comps;
        long total = 0;
        const long k = gen.uniform(1, 4);
        for (long j = 0; j < k; ++j) {
            const long d = gen.uniform(1, 6);
            total += d;
            comps.emplace_back(gen.uniform(0, 4), d);
        }
        if (total > n1 * n2 - 1) {
            continue;
        }
        const auto s = spec(n1, n2, comps);
        if (rigidity(s).rigidity == RigidityClass::NotRigid) {
            continue;
        }
        ++tested;
        const auto ch = chambers(s);
        std::vector<int> seen(comps.size(), 0);
        for (std::size_t a = 0; a < ch.partition.size(); ++a) {
            ASSERT_FALSE(ch.partition[a].empty());
            if (a > 0) {
                EXPECT_LT(ch.ratios[a - 1], ch.ratios[a]);
            }
            for (std::size_t i : ch.partition[a]) {
                ++seen[i];
                const auto &c = comps[i];
                EXPECT_EQ(make_rational(blowup::residual_e(c.genus, c.degree, n1), c.degree), ch.ratios[a]);
                EXPECT_EQ(blowup::pair(ch.walls[a], blowup::residual_class(c.genus, c.degree, n1, n2).cls), 0);
            }
            EXPECT_EQ(blowup::pair(ch.walls[a], ch.rays[a]), 0);
        }
        for (int v : seen) {
            EXPECT_EQ(v, 1);
        }
    }
}

TEST(LinkageProperty, MainTheoremMonotone)
{
    for (long gp = 2; gp <= 8; ++gp) {
        for (long dp = 1; dp <= 12; ++dp) {
            for (long n = 2; n <= 14; ++n) {
                if (dp >= n * n) {
                    continue;
                }
                const auto a = main_theorem_check(gp, dp, n, n, true);
                if (!a.hypotheses_ok || n * (n + 1) <= dp) {
                    continue;
                }
                EXPECT_TRUE(main_theorem_check(gp, dp, n, n + 1, true).hypotheses_ok) << gp << "," << dp << "," << n;
                EXPECT_TRUE(main_theorem_check(gp, dp, n + 1, n + 1, true).hypotheses_ok);
            }
        }
    }
}
