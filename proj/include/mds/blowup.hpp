#ifndef MDS_BLOWUP_HPP
#define MDS_BLOWUP_HPP

// Rank-2 intersection theory on the blowup X of P^3 along a curve.
//
// Divisors aH + bE, curves c_l l + c_f f, with H.l = 1, H.f = 0, E.l = 0, E.f = -1.
// Cones are written in (H, E) coordinates; generators run from the E side towards S_1.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mds/common.hpp"
#include "mds/error.hpp"
#include "mds/integer.hpp"
#include "mds/k3lattice.hpp"
#include "mds/numerics.hpp"
#include "mds/surd.hpp"

namespace mds::blowup
{

struct DivisorClass {
    Rational h; // coefficient of H
    Rational e; // coefficient of E

    friend bool operator==(const DivisorClass &, const DivisorClass &) = default;
};

struct CurveClass {
    Rational l;
    Rational f;

    friend bool operator==(const CurveClass &, const CurveClass &) = default;
};

inline const DivisorClass H{1, 0};
inline const DivisorClass E{0, 1};
inline const CurveClass line{1, 0};
inline const CurveClass fiber{0, 1};

/// The class n H - E of a degree-n surface through the curve.
inline DivisorClass surface(const Integer &n)
{
    return {Rational(n), -1};
}

inline Rational pair(const DivisorClass &D, const CurveClass &g)
{
    return D.h * g.l - D.e * g.f;
}

struct BlowupModel {
    CurveNumerics numerics;
    static constexpr std::array<std::string_view, 2> divisor_basis{"H", "E"};
    static constexpr std::array<std::string_view, 2> curve_basis{"l", "f"};

    /// Rows H, E; columns l, f.
    static std::array<std::array<int, 2>, 2> pairing_matrix()
    {
        return {{{1, 0}, {0, -1}}};
    }
};

/// Ray a H + b E with possibly irrational coefficients.
struct DivisorRay {
    QuadraticSurd h;
    QuadraticSurd e;

    DivisorRay() = default;
    DivisorRay(QuadraticSurd hh, QuadraticSurd ee) : h(std::move(hh)), e(std::move(ee)) {}
    DivisorRay(const DivisorClass &D) : h(D.h), e(D.e) {} // NOLINT: implicit lift

    bool rational() const
    {
        return h.is_rational() && e.is_rational();
    }

    std::optional<DivisorClass> as_class() const
    {
        if (!rational()) {
            return std::nullopt;
        }
        return DivisorClass{h.rational_part(), e.rational_part()};
    }

    std::string to_string() const
    {
        return "(" + h.to_string() + ")H + (" + e.to_string() + ")E";
    }
};

inline QuadraticSurd det(const DivisorRay &u, const DivisorRay &v)
{
    return u.h * v.e - u.e * v.h;
}

/// Two-dimensional cone <first, second> with det(first, second) < 0.
struct Cone2 {
    DivisorRay first;
    DivisorRay second;

    bool rational() const
    {
        return first.rational() && second.rational();
    }

    bool well_oriented() const
    {
        return det(first, second).sign() < 0;
    }

    bool contains(const DivisorRay &w) const
    {
        return det(first, w).sign() <= 0 && det(w, second).sign() <= 0;
    }

    bool contains(const Cone2 &other) const
    {
        return contains(other.first) && contains(other.second);
    }
};

struct ConePair {
    Cone2 effective;
    Cone2 movable;
    Cone2 nef;

    bool nested() const
    {
        return effective.well_oriented() && movable.well_oriented() && nef.well_oriented()
               && effective.contains(movable) && movable.contains(nef);
    }
};

enum class EndContraction { FibrationToP1, DivisorialToPoint, Divisorial, Fibration };

constexpr std::string_view name(EndContraction c)
{
    switch (c) {
        case EndContraction::FibrationToP1:
            return "FibrationToP1";
        case EndContraction::DivisorialToPoint:
            return "DivisorialToPoint";
        case EndContraction::Divisorial:
            return "Divisorial";
        case EndContraction::Fibration:
            return "Fibration";
    }
    return "?";
}

inline void require_ordered(const Integer &n1, const Integer &n2)
{
    if (n1 < 1 || n2 < 1) {
        throw InvalidArgument("surface degrees must be positive");
    }
    if (n1 > n2) {
        throw InvalidArgument("surface degrees must satisfy n1 <= n2, got " + to_string(n1) + " > " + to_string(n2));
    }
}

struct ResidualClass {
    CurveClass cls;
    Integer e; // 2g - 2 - (n1 - 4) d
};

inline Integer residual_e(const Integer &g, const Integer &d, const Integer &n1)
{
    return 2 * g - 2 - (n1 - 4) * d;
}

/// Class of a residual component: d l + (e - d n2) f.
inline ResidualClass residual_class(const Integer &g, const Integer &d, const Integer &n1, const Integer &n2)
{
    require_ordered(n1, n2);
    if (d < 1) {
        throw InvalidArgument("residual degree must be positive");
    }
    const Integer e = residual_e(g, d, n1);
    return {{Rational(d), Rational(Integer(e - d * n2))}, e};
}

/// Divisor (q n2 - p) H - q E orthogonal to the residual ray of slope e/d = p/q.
inline DivisorClass wall_for_ratio(const Rational &ratio, const Integer &n2)
{
    const Integer p = ratio.get_num();
    const Integer q = ratio.get_den();
    return {Rational(Integer(q * n2 - p)), Rational(Integer(-q))};
}

/// Curve ray q l + (p - q n2) f for the ratio p/q.
inline CurveClass ray_for_ratio(const Rational &ratio, const Integer &n2)
{
    const Integer p = ratio.get_num();
    const Integer q = ratio.get_den();
    return {Rational(q), Rational(Integer(p - q * n2))};
}

struct SuperRigidCones {
    ConePair cones;
    std::vector<Integer> e;
    Rational min_ratio; // min e_i / d_i
    bool super_rigid = false;
};

inline SuperRigidCones cones_super_rigid(const Integer &n1, const Integer &n2, const std::vector<CurveNumerics> &residual)
{
    require_ordered(n1, n2);
    if (residual.empty()) {
        throw InvalidArgument("empty residual: use the complete-intersection cones");
    }
    SuperRigidCones out;
    std::vector<std::string> positive;
    bool first = true;
    for (std::size_t i = 0; i < residual.size(); ++i) {
        const auto &c = residual[i];
        const Integer e = residual_class(c.genus, c.degree, n1, n2).e;
        out.e.push_back(e);
        if (sign(e) > 0) {
            positive.push_back("e_" + std::to_string(i + 1) + " = " + to_string(e) + " <= 0");
        }
        const Rational ratio = make_rational(e, c.degree);
        if (first || ratio < out.min_ratio) {
            out.min_ratio = ratio;
            first = false;
        }
    }
    if (!positive.empty()) {
        throw NotRigid("linkage is not rigid", positive);
    }
    out.super_rigid = std::all_of(out.e.begin(), out.e.end(), [](const Integer &e) { return sign(e) < 0; });
    out.cones.effective = {E, surface(n1)};
    out.cones.movable = {H, surface(n2)};
    out.cones.nef = {H, wall_for_ratio(out.min_ratio, n2)};
    return out;
}

struct CiCones {
    ConePair cones;
    EndContraction end;
};

/// Complete intersection of surfaces of degrees n1 <= n2.
inline CiCones cones_ci(const Integer &n1, const Integer &n2)
{
    require_ordered(n1, n2);
    CiCones out;
    out.cones.effective = {E, surface(n1)};
    out.cones.movable = {H, surface(n2)};
    out.cones.nef = out.cones.movable;
    out.end = n1 == n2 ? EndContraction::FibrationToP1 : EndContraction::DivisorialToPoint;
    return out;
}

struct ExtremalSurfaceCones {
    ConePair cones;
    Integer r;
    k3::ConeDescription k3_cone;
    k3::LatticeRay restricted_boundary; // boundary of Mov restricted to Pic(S), basis (H, C)
    bool boundary_irrational = false;
    k3::QuarticObstructionCheck check;
};

/// Cones of the blowup along the general (g, d) curve on a smooth quartic.
/// Mov = Nef = <H, (d + sqrt r) H - 4E>, Eff = <E, 4H - E>.
inline ExtremalSurfaceCones cones_extremal_surface(const CurveNumerics &n, const Integer &s)
{
    if (s != 4) {
        throw InvalidArgument("only quartic surfaces (s = 4) are supported, got s = " + to_string(s));
    }
    ExtremalSurfaceCones out;
    out.check = k3::quartic_obstruction_hypotheses(n);
    if (!out.check.ok()) {
        throw HypothesisFailure("quartic cone criterion does not apply to " + n.to_string(),
                                violated_names(out.check.hypotheses));
    }
    const auto model = k3::quartic_model(n);
    out.r = model.r;
    out.k3_cone = k3::cone_of_curves(model);
    out.restricted_boundary = out.k3_cone.rays[0];
    const DivisorRay boundary(out.restricted_boundary.h, out.restricted_boundary.c);
    out.boundary_irrational = !boundary.rational();
    out.cones.effective = {E, surface(4)};
    out.cones.movable = {H, boundary};
    out.cones.nef = out.cones.movable;
    return out;
}

struct FlipSteps {
    std::vector<Integer> multiplicities;
    Integer total;
    std::pair<Integer, Integer> final_pair;
};

/// Euclidean quotients of (a1, a2); the final pair (a_n, m_n a_{n+1}) has equal entries.
inline FlipSteps flip_steps(const Integer &a1, const Integer &a2)
{
    if (a2 < 1 || a1 < 1) {
        throw InvalidArgument("flip_steps needs positive entries");
    }
    if (a1 < a2) {
        throw InvalidArgument("flip_steps needs a1 >= a2");
    }
    FlipSteps out;
    out.total = 0;
    Integer a = a1, b = a2;
    for (;;) {
        const Integer m = floor_div(a, b);
        const Integer rem = a - m * b;
        out.multiplicities.push_back(m);
        out.total += m;
        if (sign(rem) == 0) {
            out.final_pair = {a, m * b};
            break;
        }
        a = b;
        b = rem;
    }
    return out;
}

inline Integer unbalance_degree(const Integer &n1, const Integer &n2, const Integer &d)
{
    require_ordered(n1, n2);
    return (n2 - n1) * d;
}

} // namespace mds::blowup

#endif
