#ifndef MDS_K3LATTICE_HPP
#define MDS_K3LATTICE_HPP

// Rank-2 Picard lattice <H, C> of a smooth quartic surface containing a (g, d) curve.
// Gram matrix in the basis (H|_S, C) is [[4, d], [d, 2g - 2]].

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mds/common.hpp"
#include "mds/error.hpp"
#include "mds/integer.hpp"
#include "mds/numerics.hpp"
#include "mds/pell.hpp"
#include "mds/surd.hpp"

namespace mds::k3
{

inline bool mori_existence(const CurveNumerics &n)
{
    return 8 * n.genus < n.degree * n.degree;
}

/// r = d^2 - 8(g - 1). Defined only when 8g < d^2.
inline Integer discriminant(const CurveNumerics &n)
{
    if (!mori_existence(n)) {
        throw HypothesisFailure("no smooth quartic contains a " + n.to_string() + " curve with Picard rank 2",
                                {"8g < d^2"});
    }
    return n.degree * n.degree - 8 * (n.genus - 1);
}

using Gram = std::array<std::array<Integer, 2>, 2>;

struct QuarticLatticeModel {
    CurveNumerics numerics;
    Gram gram;
    Integer r;
};

inline QuarticLatticeModel quartic_model(const CurveNumerics &n)
{
    const Integer r = discriminant(n);
    return {n, Gram{{{Integer(4), n.degree}, {n.degree, Integer(2 * n.genus - 2)}}}, r};
}

/// Bilinear form of the lattice on surd-valued coordinates (x H + y C).
inline QuadraticSurd form(const Gram &G, const QuadraticSurd &x1, const QuadraticSurd &y1, const QuadraticSurd &x2,
                          const QuadraticSurd &y2)
{
    const QuadraticSurd g00{Rational(G[0][0])}, g01{Rational(G[0][1])}, g11{Rational(G[1][1])};
    return g00 * x1 * x2 + g01 * (x1 * y2 + y1 * x2) + g11 * y1 * y2;
}

struct ClassSearch {
    bool exists = false;
    std::optional<pell::PellSolution> witness; // (d0, n) with d0^2 - r n^2 = 4c
    pell::PellOutcome outcome;
};

/// Decides whether d0^2 - r n^2 = 4c has an integer solution. A witness with n >= 1 is
/// preferred over a multiple of H (n = 0) when both exist.
inline ClassSearch has_class_of_self_intersection(const QuarticLatticeModel &m, const Integer &c)
{
    ClassSearch out;
    out.outcome = pell::decide(pell::PellProblem(m.r, 4 * c));
    out.exists = out.outcome.solvable;
    out.witness = out.outcome.witness;
    if (out.exists && sign(out.witness->y) == 0 && !is_perfect_square(m.r)) {
        const pell::PellSolution unit = pell::solve_unit(m.r);
        std::optional<pell::PellSolution> best;
        for (auto s : pell::solution_classes(pell::PellProblem(m.r, 4 * c))) {
            if (sign(s.y) == 0) {
                s = {s.x * unit.x, s.x * unit.y};
            }
            if (!best || s.y < best->y) {
                best = s;
            }
        }
        out.witness = best;
    }
    return out;
}

struct RationalEllipticTest {
    bool has_rational = false; // x^2 - r y^2 = -8 solvable
    bool has_elliptic = false; // r a perfect square
    pell::PellOutcome rational;
    pell::PellOutcome elliptic;
};

inline RationalEllipticTest rational_elliptic_test(const Integer &r)
{
    RationalEllipticTest out;
    out.rational = pell::decide(pell::PellProblem(r, -8));
    out.elliptic = pell::decide(pell::PellProblem(r, 0));
    out.has_rational = out.rational.solvable;
    out.has_elliptic = out.elliptic.solvable;
    return out;
}

inline RationalEllipticTest rational_elliptic_test(const QuarticLatticeModel &m)
{
    return rational_elliptic_test(m.r);
}

/// Direction h H + c C of a boundary ray.
struct LatticeRay {
    QuadraticSurd h;
    QuadraticSurd c;

    bool rational() const
    {
        return h.is_rational() && c.is_rational();
    }
};

struct ConeDescription {
    std::array<LatticeRay, 2> rays;
    std::array<bool, 2> rational{};
    bool closed = false;
};

/// Closure of the cone of curves, which equals the closed positive cone when no
/// (-2)- or 0-classes exist. Rays are the isotropic directions (d + sqrt r) H - 4C and
/// (sqrt r - d) H + 4C, both with positive degree 4 sqrt r.
inline ConeDescription cone_of_curves(const QuarticLatticeModel &m)
{
    const RationalEllipticTest t = rational_elliptic_test(m);
    if (t.has_rational || t.has_elliptic) {
        std::vector<std::string> violated;
        if (t.has_rational) {
            violated.emplace_back("no class with C^2 = -2");
        }
        if (t.has_elliptic) {
            violated.emplace_back("no class with C^2 = 0");
        }
        throw NotPositiveCone("the cone of curves is not the positive cone for r = " + to_string(m.r), violated);
    }
    const Rational d(m.numerics.degree);
    ConeDescription out;
    out.rays[0] = {QuadraticSurd(d, 1, m.r), QuadraticSurd(-4)};
    out.rays[1] = {QuadraticSurd(-d, 1, m.r), QuadraticSurd(4)};
    out.rational = {out.rays[0].rational(), out.rays[1].rational()};
    out.closed = false;
    return out;
}

/// The hypotheses under which the general (g, d) curve on a quartic gives a blowup with an
/// irrational movable-cone boundary.
struct QuarticObstructionCheck {
    std::vector<Hypothesis> hypotheses;
    std::optional<Integer> r;
    std::optional<RationalEllipticTest> pell;
    Integer inequality_value; // 64 - 8d + 2g - 2

    bool ok() const
    {
        return all_hold(hypotheses);
    }
};

inline Integer quartic_inequality_value(const CurveNumerics &n)
{
    return 64 - 8 * n.degree + 2 * n.genus - 2;
}

inline QuarticObstructionCheck quartic_obstruction_hypotheses(const CurveNumerics &n)
{
    QuarticObstructionCheck out;
    out.inequality_value = quartic_inequality_value(n);
    out.hypotheses.push_back(
        check({"8g < d^2", 8 * n.genus, Relation::Less, n.degree * n.degree}));
    if (mori_existence(n)) {
        out.r = discriminant(n);
        out.pell = rational_elliptic_test(*out.r);
        out.hypotheses.push_back({"x^2 - r y^2 = -8 unsolvable", !out.pell->has_rational,
                                  "r = " + to_string(*out.r) + ", "
                                      + std::string(pell::name(out.pell->rational.certificate))});
        out.hypotheses.push_back({"r not a perfect square", !out.pell->has_elliptic, "r = " + to_string(*out.r)});
    } else {
        out.hypotheses.push_back({"x^2 - r y^2 = -8 unsolvable", false, "r undefined"});
        out.hypotheses.push_back({"r not a perfect square", false, "r undefined"});
    }
    const bool degree_ok = n.degree >= 16;
    const bool ineq_ok = sign(out.inequality_value) <= 0;
    out.hypotheses.push_back({"d >= 16 or 64 - 8d + 2g - 2 <= 0", degree_ok || ineq_ok,
                              "d = " + to_string(n.degree) + ", 64 - 8d + 2g - 2 = " + to_string(out.inequality_value)});
    return out;
}

} // namespace mds::k3

#endif
