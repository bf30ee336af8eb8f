#include <gtest/gtest.h>

#include "mds/blowup.hpp"
#include "oracles.hpp"

using namespace mds;
using namespace mds::blowup;

TEST(Blowup, Pairing)
{
    EXPECT_EQ(pair(H, line), 1);
    EXPECT_EQ(pair(H, fiber), 0);
    EXPECT_EQ(pair(E, line), 0);
    EXPECT_EQ(pair(E, fiber), -1);
    EXPECT_EQ(pair(surface(5), fiber), 1);
    // gamma = d(l - n2 f) + e f with d = 1, n2 = 5, e = -3
    const CurveClass gamma{1, Rational(-5 - 3)};
    EXPECT_EQ(pair(E, gamma), 8);
}

TEST(Blowup, ResidualClass)
{
    EXPECT_EQ(residual_class(0, 1, 4, 4).e, -2);
    EXPECT_EQ(residual_class(2, 5, 5, 5).e, -3);
    const auto r = residual_class(0, 1, 5, 5);
    EXPECT_EQ(r.e, -3);
    EXPECT_EQ(r.cls, (CurveClass{1, -8}));
    EXPECT_THROW(residual_class(0, 1, 5, 4), InvalidArgument);
}

TEST(Blowup, SuperRigidCones)
{
    const auto out = cones_super_rigid(5, 5, {{2, 5}});
    EXPECT_TRUE(out.super_rigid);
    EXPECT_EQ(out.cones.effective.first.as_class(), E);
    EXPECT_EQ(out.cones.effective.second.as_class(), surface(5));
    EXPECT_EQ(out.cones.movable.second.as_class(), surface(5));
    const auto wall = *out.cones.nef.second.as_class();
    EXPECT_EQ(wall, (DivisorClass{28, -5}));
    EXPECT_EQ(pair(wall, residual_class(2, 5, 5, 5).cls), 0);
    EXPECT_TRUE(out.cones.nested());

    EXPECT_THROW(cones_super_rigid(5, 5, {}), InvalidArgument);
    try {
        cones_super_rigid(4, 5, {{3, 6}});
        FAIL();
    } catch (const NotRigid &e) {
        EXPECT_EQ(e.violated(), std::vector<std::string>{"e_1 = 4 <= 0"});
    }
}

TEST(Blowup, CiCones)
{
    const auto a = cones_ci(2, 3);
    EXPECT_EQ(a.cones.movable.second.as_class(), surface(3));
    EXPECT_EQ(a.cones.nef.second.as_class(), surface(3));
    EXPECT_EQ(a.end, EndContraction::DivisorialToPoint);
    EXPECT_EQ(cones_ci(3, 3).end, EndContraction::FibrationToP1);
    EXPECT_EQ(cones_ci(1, 4).end, EndContraction::DivisorialToPoint);
    EXPECT_TRUE(a.cones.nested());
}

TEST(Blowup, ExtremalSurfaceCones)
{
    const auto c = cones_extremal_surface({3, 9}, 4);
    EXPECT_EQ(c.r, 65);
    EXPECT_TRUE(c.boundary_irrational);
    EXPECT_EQ(c.cones.movable.second.h.radicand(), 65);
    EXPECT_EQ(c.cones.effective.second.as_class(), surface(4));
    EXPECT_TRUE(c.cones.nested());

    EXPECT_THROW(cones_extremal_surface({1, 4}, 4), HypothesisFailure);
    EXPECT_THROW(cones_extremal_surface({3, 9}, 3), InvalidArgument);

    const auto c23 = cones_extremal_surface({23, 14}, 4);
    EXPECT_EQ(c23.r, 20);
    EXPECT_EQ(c23.check.inequality_value, -4);
    EXPECT_TRUE(c23.boundary_irrational);
}

TEST(Blowup, FlipSteps)
{
    const auto a = flip_steps(5, 3);
    EXPECT_EQ(a.multiplicities, (std::vector<Integer>{1, 1, 2}));
    EXPECT_EQ(a.total, 4);
    EXPECT_EQ(a.final_pair, (std::pair<Integer, Integer>{2, 2}));
    const auto b = flip_steps(6, 6);
    EXPECT_EQ(b.multiplicities, std::vector<Integer>{1});
    EXPECT_EQ(b.final_pair, (std::pair<Integer, Integer>{6, 6}));
    const auto c = flip_steps(7, 1);
    EXPECT_EQ(c.total, 7);
    EXPECT_EQ(c.final_pair, (std::pair<Integer, Integer>{7, 7}));
    EXPECT_THROW(flip_steps(0, 0), InvalidArgument);
    EXPECT_THROW(flip_steps(3, 5), InvalidArgument);
}

TEST(Blowup, UnbalanceDegree)
{
    EXPECT_EQ(unbalance_degree(4, 5, 6), 6);
    EXPECT_EQ(unbalance_degree(5, 5, 11), 0);
    EXPECT_EQ(unbalance_degree(4, 9, 3), 15);
}

TEST(BlowupProperty, ConventionConsistency)
{
    oracle::Gen gen(3);
    for (int i = 0; i < 1000; ++i) {
        const long n1 = gen.uniform(1, 12);
        const long n2 = gen.uniform(n1, 14);
        const long d = gen.uniform(1, 40);
        const long g = gen.uniform(0, 60);
        const auto r = residual_class(g, d, n1, n2);
        EXPECT_EQ(pair(E, r.cls), n2 * d - r.e);
        EXPECT_EQ(pair(H, r.cls), d);
    }
}

TEST(BlowupProperty, SuperRigidWallOrthogonal)
{
    oracle::Gen gen(5);
    int tested = 0;
    while (tested < 500) {
        const long n1 = gen.uniform(1, 10);
        const long n2 = gen.uniform(n1, 12);
        std::vector<CurveNumerics> comps;
        const long k = gen.uniform(1, 3);
        for (long j = 0; j < k; ++j) {
            comps.emplace_back(gen.uniform(0, 6), gen.uniform(1, 8));
        }
        try {
            const auto out = cones_super_rigid(n1, n2, comps);
            ++tested;
            EXPECT_TRUE(out.cones.nested());
            bool hit = false;
            for (const auto &c : comps) {
                const auto rc = residual_class(c.genus, c.degree, n1, n2);
                const Rational p = pair(*out.cones.nef.second.as_class(), rc.cls);
                EXPECT_GE(p, 0);
                hit = hit || p == 0;
            }
            EXPECT_TRUE(hit);
        } catch (const NotRigid &) {
        }
    }
}

TEST(BlowupProperty, FlipStepsMatchesSubtraction)
{
    oracle::Gen gen(7);
    for (int i = 0; i < 500; ++i) {
        const long a2 = gen.uniform(1, 500);
        const long a1 = gen.uniform(a2, 1000);
        const auto f = flip_steps(a1, a2);
        const auto chain = oracle::subtraction_chain(a1, a2);
        EXPECT_EQ(f.total, chain.steps);
        EXPECT_EQ(f.final_pair.first, f.final_pair.second);
        const long g = std::gcd(a1, a2);
        EXPECT_TRUE(divides(g, f.final_pair.first));
    }
}
