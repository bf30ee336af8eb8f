#include <gtest/gtest.h>

#include "mds/k3lattice.hpp"
#include "oracles.hpp"

using namespace mds;
using namespace mds::k3;

TEST(K3, Discriminant)
{
    EXPECT_EQ(discriminant({159, 36}), 32);
    EXPECT_EQ(discriminant({1, 4}), 16);
    EXPECT_EQ(discriminant({141, 35}), 105);
    EXPECT_EQ(discriminant({141, 35}), 35 * (35 - 32));
    EXPECT_THROW(discriminant({2, 4}), HypothesisFailure);
}

TEST(K3, MoriExistence)
{
    EXPECT_TRUE(mori_existence({3, 9}));
    EXPECT_FALSE(mori_existence({2, 4}));
    EXPECT_TRUE(mori_existence({141, 35}));
}

TEST(K3, ClassesOfGivenSquare)
{
    const auto m = quartic_model({3, 9});
    EXPECT_EQ(m.r, 65);
    const auto minus2 = has_class_of_self_intersection(m, -2);
    EXPECT_FALSE(minus2.exists);
    EXPECT_EQ(minus2.outcome.certificate, pell::CertificateKind::ModulusSieve);
    EXPECT_EQ(minus2.outcome.modulus, Integer(5));

    const auto curve = has_class_of_self_intersection(m, 4);
    ASSERT_TRUE(curve.exists);
    EXPECT_EQ(*curve.witness, (pell::PellSolution{9, 1}));

    const auto sq = has_class_of_self_intersection(quartic_model({1, 4}), 0);
    EXPECT_TRUE(sq.exists);
}

TEST(K3, RationalEllipticTest)
{
    const auto t32 = rational_elliptic_test(Integer(32));
    EXPECT_FALSE(t32.has_rational);
    EXPECT_FALSE(t32.has_elliptic);
    EXPECT_TRUE(rational_elliptic_test(Integer(16)).has_elliptic);
    const auto t73 = rational_elliptic_test(Integer(73));
    EXPECT_TRUE(t73.has_rational);
    EXPECT_FALSE(t73.has_elliptic);
    const auto &w = *t73.rational.witness;
    EXPECT_EQ(w.x * w.x - 73 * w.y * w.y, -8);
}

TEST(K3, ConeOfCurves)
{
    const auto m = quartic_model({3, 9});
    const auto cone = cone_of_curves(m);
    for (const auto &ray : cone.rays) {
        EXPECT_EQ(ray.h.radicand(), 65);
        EXPECT_FALSE(ray.rational());
        EXPECT_EQ(form(m.gram, ray.h, ray.c, ray.h, ray.c), QuadraticSurd(0));
    }
    EXPECT_FALSE(cone.rational[0] || cone.rational[1]);
    EXPECT_FALSE(cone.closed);

    EXPECT_THROW(cone_of_curves(quartic_model({1, 4})), NotPositiveCone);
    const auto c23 = cone_of_curves(quartic_model({23, 14}));
    EXPECT_EQ(c23.rays[0].h.radicand(), 20);
    EXPECT_FALSE(c23.rays[0].rational());
}

TEST(K3, NotPositiveConeNamesReasons)
{
    try {
        cone_of_curves(quartic_model({1, 4}));
        FAIL();
    } catch (const NotPositiveCone &e) {
        EXPECT_EQ(e.violated(), std::vector<std::string>{"no class with C^2 = 0"});
    }
}

// Over all (g, d) with d <= 40 and 8g < d^2.
TEST(K3Property, GramConsistencyAndPellBridge)
{
    for (long d = 1; d <= 40; ++d) {
        for (long g = 0; 8 * g < d * d; ++g) {
            const auto m = quartic_model({g, d});
            ASSERT_GT(m.r, 0);
            EXPECT_EQ(4 * (2 * g - 2), d * d - m.r * 1);
            const auto c2 = has_class_of_self_intersection(m, -2);
            EXPECT_EQ(c2.exists, pell::decide(m.r, -8).solvable);
            if (c2.exists) {
                const auto &w = *c2.witness;
                EXPECT_EQ(w.x * w.x - m.r * w.y * w.y, -8);
            }
            EXPECT_EQ(has_class_of_self_intersection(m, 0).exists, is_perfect_square(m.r));
        }
    }
}

TEST(K3Property, BoundaryRaysIsotropic)
{
    for (long d = 1; d <= 40; ++d) {
        for (long g = 0; 8 * g < d * d; ++g) {
            const auto m = quartic_model({g, d});
            const auto t = rational_elliptic_test(m);
            if (t.has_rational || t.has_elliptic) {
                continue;
            }
            const auto cone = cone_of_curves(m);
            for (const auto &ray : cone.rays) {
                EXPECT_EQ(form(m.gram, ray.h, ray.c, ray.h, ray.c).sign(), 0) << g << "," << d;
                EXPECT_EQ(ray.rational(), is_perfect_square(m.r));
            }
        }
    }
}

TEST(K3, ObstructionHypotheses)
{
    const auto c = quartic_obstruction_hypotheses({3, 9});
    EXPECT_TRUE(c.ok());
    EXPECT_EQ(c.inequality_value, -4);
    const auto bad = quartic_obstruction_hypotheses({1, 4});
    EXPECT_FALSE(bad.ok());
    EXPECT_EQ(violated_names(bad.hypotheses),
              (std::vector<std::string>{"r not a perfect square", "d >= 16 or 64 - 8d + 2g - 2 <= 0"}));
}
