#ifndef MDS_HILBERT_HPP
#define MDS_HILBERT_HPP

// Known components of Hilbert schemes of smooth space curves: curves on quadrics and
// cubics, complete intersections, curves on quartics and the (20n + 1, 5n) family.

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mds/common.hpp"
#include "mds/error.hpp"
#include "mds/integer.hpp"
#include "mds/k3lattice.hpp"
#include "mds/linkage.hpp"
#include "mds/numerics.hpp"
#include "mds/pell.hpp"

namespace mds::hilbert
{

enum class Family { CI, ACI, Quadric, Cubic, Quartic, QuarticLargeFamily, LowDegQuarticSpecial };

constexpr std::string_view name(Family f)
{
    switch (f) {
        case Family::CI:
            return "CI";
        case Family::ACI:
            return "ACI";
        case Family::Quadric:
            return "Quadric";
        case Family::Cubic:
            return "Cubic";
        case Family::Quartic:
            return "Quartic";
        case Family::QuarticLargeFamily:
            return "QuarticLargeFamily";
        case Family::LowDegQuarticSpecial:
            return "LowDegQuarticSpecial";
    }
    return "?";
}

enum class ComponentStatus { Component, ComponentOfReduction, OpenSmoothLocus, NotEstablished };

constexpr std::string_view name(ComponentStatus s)
{
    switch (s) {
        case ComponentStatus::Component:
            return "Component";
        case ComponentStatus::ComponentOfReduction:
            return "ComponentOfReduction";
        case ComponentStatus::OpenSmoothLocus:
            return "OpenSmoothLocus";
        case ComponentStatus::NotEstablished:
            return "NotEstablished";
    }
    return "?";
}

struct LinkageStep {
    Integer n1;
    Integer n2;
    CurveNumerics from;
    CurveNumerics to;
};

struct ComponentRecord {
    CurveNumerics numerics;
    Family family;
    std::string parameters; // e.g. "(2,3)" or "(22;6,6,6,6,4,3)"
    std::optional<Integer> dimension;
    ComponentStatus status = ComponentStatus::NotEstablished;
    Status verdict_hint = Status::Inconclusive;
    std::vector<Hypothesis> conditions;
    std::vector<std::string> notes;
    std::vector<LinkageStep> linkage_chain;
};

/// Curves of type (a, b) on a smooth quadric.
inline ComponentRecord quadric_numerics(const Integer &a, const Integer &b)
{
    if (a < 1 || b < 1) {
        throw InvalidArgument("quadric type needs a, b >= 1");
    }
    const Integer d = a + b;
    const Integer g = (a - 1) * (b - 1);
    ComponentRecord out{CurveNumerics(g, d), Family::Quadric, "(" + to_string(a) + "," + to_string(b) + ")"};
    out.conditions.push_back(check({"d > 4", d, Relation::Greater, 4}));
    out.conditions.push_back(check({"g > 2d - 8", g, Relation::Greater, 2 * d - 8}));
    const bool exception = (a == 3 && b == 5) || (a == 5 && b == 3);
    if (all_hold(out.conditions)) {
        out.status = ComponentStatus::Component;
    } else if (exception) {
        out.status = ComponentStatus::Component;
        out.notes.emplace_back("exception: the (3,5) locus is the whole Hilbert scheme of (8,8) curves");
    }
    out.verdict_hint = Status::MDS;
    return out;
}

/// Genus of the curves of degree d on a quadric of maximal genus: d^2/4 - d + 1 (d even),
/// (d^2 - 1)/4 - d + 1 (d odd).
inline Integer quadric_extremal_genus(const Integer &d)
{
    if (divides(2, d)) {
        return d * d / 4 - d + 1;
    }
    return (d * d - 1) / 4 - d + 1;
}

struct CubicType {
    Integer k;
    std::array<Integer, 6> m; // sorted m1 >= ... >= m6

    CubicType(Integer kk, std::array<Integer, 6> mm) : k(std::move(kk)), m(std::move(mm))
    {
        std::sort(m.begin(), m.end(), std::greater<>());
        if (sign(m[5]) < 0) {
            throw InvalidArgument("cubic type entries must be non-negative");
        }
        if (!(k > m[0])) {
            throw InvalidArgument("cubic type needs k > m1");
        }
        if (k < m[0] + m[1] + m[2]) {
            throw InvalidArgument("cubic type needs k >= m1 + m2 + m3");
        }
    }

    std::string to_string() const
    {
        std::string s = "(" + k.get_str() + ";";
        for (std::size_t i = 0; i < 6; ++i) {
            s += (i ? "," : "") + m[i].get_str();
        }
        return s + ")";
    }
};

struct CubicRecord {
    ComponentRecord record;
    Integer h1;               // h^1(I_C(3))
    bool h1_reads_b_as_m;     // the count formula was used with b_i read as m_i
};

/// Curves of type t = (k; m1..m6) on a smooth cubic.
inline CubicRecord cubic_numerics(const CubicType &t)
{
    Integer sum = 0;
    Integer pairs = 0;
    for (const auto &mi : t.m) {
        sum += mi;
        pairs += choose2(mi);
    }
    const Integer d = 3 * t.k - sum;
    const Integer g = choose2(t.k - 1) - pairs;
    if (d < 1) {
        throw InvalidArgument("cubic type " + t.to_string() + " has non-positive degree");
    }
    if (sign(g) < 0) {
        throw InvalidArgument("cubic type " + t.to_string() + " has negative genus");
    }
    CubicRecord out{{CurveNumerics(g, d), Family::Cubic, t.to_string()}, 0, false};
    auto &rec = out.record;
    if (d >= 12) {
        out.h1_reads_b_as_m = true;
        for (const auto &mi : t.m) {
            if (mi == 2) {
                out.h1 += 1;
            } else if (mi == 1) {
                out.h1 += 3;
            } else if (mi == 0) {
                out.h1 += 6;
            }
        }
        rec.notes.emplace_back("h^1 count formula evaluated with b_i read as m_i");
    }
    if (d > 9) {
        rec.dimension = d + g + 18;
    }
    rec.conditions.push_back(check({"d > 9", d, Relation::Greater, 9}));
    if (out.h1 == 0) {
        rec.conditions.push_back(check({"h^1(I_C(3)) = 0", out.h1, Relation::Equal, 0}));
        rec.conditions.push_back(check({"g > 3d - 19", g, Relation::Greater, 3 * d - 19}));
        if (all_hold(rec.conditions)) {
            rec.status = ComponentStatus::Component;
        }
    } else if (out.h1 == 1) {
        rec.conditions.push_back(check({"h^1(I_C(3)) = 1", out.h1, Relation::Equal, 1}));
        rec.conditions.push_back(check({"g >= 3d - 18", g, Relation::GreaterEqual, 3 * d - 18}));
        if (all_hold(rec.conditions)) {
            rec.status = ComponentStatus::ComponentOfReduction;
        }
    } else {
        rec.conditions.push_back(check({"h^1(I_C(3)) <= 1", out.h1, Relation::LessEqual, 1}));
    }
    rec.verdict_hint = Status::MDS;
    return out;
}

/// Complete intersection of surfaces of degrees n1, n2.
inline ComponentRecord ci_numerics(const Integer &n1, const Integer &n2)
{
    if (n1 < 1 || n2 < 1) {
        throw InvalidArgument("complete intersection degrees must be positive");
    }
    const Integer d = n1 * n2;
    const Integer g = n1 * n2 * (n1 + n2 - 4) / 2 + 1;
    ComponentRecord out{CurveNumerics(g, d), Family::CI, "(" + to_string(n1) + "," + to_string(n2) + ")"};
    out.status = ComponentStatus::Component;
    out.verdict_hint = Status::MDS;
    return out;
}

/// Curves on smooth quartics with Picard lattice <H, C>, as a component of dimension 33 + g.
inline ComponentRecord quartic_component(const CurveNumerics &n)
{
    ComponentRecord out{n, Family::Quartic, ""};
    const Integer &g = n.genus;
    const Integer &d = n.degree;
    out.conditions.push_back(check({"8g < d^2", 8 * g, Relation::Less, d * d}));
    out.conditions.push_back(check({"d > 16", d, Relation::Greater, 16}));
    out.conditions.push_back(
        check({"64 - 8d + 2g - 2 >= 0", k3::quartic_inequality_value(n), Relation::GreaterEqual, 0}));
    if (k3::mori_existence(n)) {
        const Integer r = k3::discriminant(n);
        const auto outcome = pell::decide(pell::PellProblem(r, -8));
        out.conditions.push_back({"x^2 - r y^2 = -8 unsolvable", !outcome.solvable,
                                  "r = " + to_string(r) + ", " + std::string(pell::name(outcome.certificate))});
    } else {
        out.conditions.push_back({"x^2 - r y^2 = -8 unsolvable", false, "r undefined"});
    }
    if (all_hold(out.conditions)) {
        out.status = ComponentStatus::Component;
        out.dimension = 33 + g;
    } else {
        for (const auto &v : violated_names(out.conditions)) {
            out.notes.push_back("failed: " + v);
        }
    }
    const auto t1 = k3::quartic_obstruction_hypotheses(n);
    out.verdict_hint = t1.ok() ? Status::NotMDS : Status::Inconclusive;
    return out;
}

struct FamilyCertificate {
    Integer r;
    bool r_matches_product = false; // r = d(d - 32)
    std::optional<pell::SieveCertificate> rational_sieve; // mod-5 certificate for x^2 - r y^2 = -8
    bool nonsquare = false;
    Integer floor_sqrt;
    std::optional<Integer> odd_valuation_prime; // a prime p with v_p(r) odd
    unsigned long valuation = 0;
};

struct LargeFamilyRecord {
    ComponentRecord record;
    FamilyCertificate certificate;
};

/// Non-square certificate: a prime of odd valuation, preferring 5.
inline void certify_nonsquare(FamilyCertificate &c)
{
    c.floor_sqrt = isqrt(c.r);
    c.nonsquare = c.floor_sqrt * c.floor_sqrt != c.r;
    if (divides(5, c.r) && valuation(c.r, 5) % 2 == 1) {
        c.odd_valuation_prime = 5;
        c.valuation = valuation(c.r, 5);
        return;
    }
    for (const auto &[p, e] : factorize(c.r)) {
        if (e % 2 == 1) {
            c.odd_valuation_prime = p;
            c.valuation = e;
            return;
        }
    }
}

/// The pairs (g, d) = (20n + 1, 5n), n >= 7.
inline LargeFamilyRecord large_family(const Integer &nn)
{
    if (nn < 7) {
        throw InvalidArgument("the (20n + 1, 5n) family starts at n = 7, got " + to_string(nn));
    }
    const CurveNumerics n(20 * nn + 1, 5 * nn);
    LargeFamilyRecord out{quartic_component(n), {}};
    out.record.family = Family::QuarticLargeFamily;
    out.record.parameters = "n=" + to_string(nn);
    auto &c = out.certificate;
    c.r = k3::discriminant(n);
    c.r_matches_product = c.r == n.degree * (n.degree - 32);
    c.rational_sieve = pell::sieve(pell::PellProblem(c.r, -8), {Integer(5)});
    certify_nonsquare(c);
    if (!c.nonsquare) {
        out.record.notes.push_back("r = " + to_string(c.r) + " = " + to_string(c.floor_sqrt)
                                   + "^2 is a perfect square: elliptic classes exist");
    }
    return out;
}

/// The four pairs with d < 16 whose quartic locus is a component and satisfies the
/// irrational-cone criterion.
inline std::vector<ComponentRecord> low_degree_quartic_catalog()
{
    struct Entry {
        long g, d;
        const char *note;
    };
    static const std::array<Entry, 4> entries{{
        {3, 9, "Hilbert scheme irreducible (Ein); every curve lies on a quartic"},
        {7, 10, "Hilbert scheme irreducible (Ein); every curve lies on a quartic"},
        {15, 12, "quartic locus is a component"},
        {23, 14, "ACM by linkage to a line; ACM loci are open"},
    }};
    std::vector<ComponentRecord> out;
    for (const auto &e : entries) {
        const CurveNumerics n(e.g, e.d);
        ComponentRecord rec{n, Family::LowDegQuarticSpecial, ""};
        rec.dimension = 33 + n.genus;
        rec.status = ComponentStatus::Component;
        rec.notes.emplace_back(e.note);
        const auto t1 = k3::quartic_obstruction_hypotheses(n);
        rec.conditions = t1.hypotheses;
        rec.verdict_hint = t1.ok() ? Status::NotMDS : Status::Inconclusive;
        if (e.g == 23) {
            CurveNumerics cur = n;
            for (const auto &[a, b] : std::array<std::pair<long, long>, 3>{{{4, 5}, {3, 3}, {2, 2}}}) {
                const auto next = linkage::linked_numerics(cur.genus, cur.degree, a, b);
                const CurveNumerics to(next.genus, next.degree);
                rec.linkage_chain.push_back({a, b, cur, to});
                cur = to;
            }
        }
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace mds::hilbert

#endif
