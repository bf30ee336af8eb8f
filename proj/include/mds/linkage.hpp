#ifndef MDS_LINKAGE_HPP
#define MDS_LINKAGE_HPP

// Linkage arithmetic, rigidity, Mori chambers of skew rigid linkages, and the
// hypothesis checks for the nef-not-semiample obstruction.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mds/blowup.hpp"
#include "mds/common.hpp"
#include "mds/error.hpp"
#include "mds/integer.hpp"
#include "mds/numerics.hpp"

namespace mds::linkage
{

/// Residual numerics; the genus may come out negative, in which case no such linkage exists.
struct LinkedNumerics {
    Integer genus;
    Integer degree;

    bool realizable() const
    {
        return sign(genus) >= 0;
    }

    friend bool operator==(const LinkedNumerics &, const LinkedNumerics &) = default;
};

/// d' = n1 n2 - d and g' = g - (n1 + n2 - 4)(d - d') / 2.
inline LinkedNumerics linked_numerics(const Integer &g, const Integer &d, const Integer &n1, const Integer &n2)
{
    if (n1 < 1 || n2 < 1) {
        throw InvalidArgument("surface degrees must be positive");
    }
    if (d < 1 || d > n1 * n2 - 1) {
        throw InvalidArgument("degree " + to_string(d) + " is not in [1, n1 n2 - 1] for (n1, n2) = ("
                              + to_string(n1) + "," + to_string(n2) + ")");
    }
    const Integer dp = n1 * n2 - d;
    const Integer twice = (n1 + n2 - 4) * (d - dp);
    if (!divides(2, twice)) {
        throw NonIntegralGenus("(n1 + n2 - 4)(d - d') = " + to_string(twice) + " is odd", {"integral residual genus"});
    }
    return {g - twice / 2, dp};
}

inline Integer ci_subcanonical_level(const Integer &n1, const Integer &n2)
{
    return n1 + n2 - 4;
}

struct ResidualComponent {
    CurveNumerics numerics;
    std::optional<bool> qcanonical;
    std::optional<Integer> subcanonical_level; // nu with K ~ nu H
};

struct SkewLinkageSpec {
    Integer n1;
    Integer n2;
    std::vector<ResidualComponent> components;

    SkewLinkageSpec(Integer a, Integer b, std::vector<ResidualComponent> comps)
        : n1(std::move(a)), n2(std::move(b)), components(std::move(comps))
    {
        blowup::require_ordered(n1, n2);
        if (components.empty()) {
            throw InvalidArgument("a skew linkage needs at least one residual component");
        }
        Integer total = 0;
        for (auto &c : components) {
            total += c.numerics.degree;
            if (!c.qcanonical && c.numerics.genus <= 1) {
                c.qcanonical = true;
            }
            if (c.subcanonical_level
                && *c.subcanonical_level * c.numerics.degree != 2 * c.numerics.genus - 2) {
                throw InvalidArgument("subcanonical level " + to_string(*c.subcanonical_level)
                                      + " is inconsistent with " + c.numerics.to_string()
                                      + ": K ~ nu H forces 2g - 2 = nu d");
            }
        }
        if (total > n1 * n2 - 1) {
            throw InvalidArgument("residual degrees sum to " + to_string(total) + " > n1 n2 - 1");
        }
    }

    static SkewLinkageSpec from_numerics(const Integer &a, const Integer &b, const std::vector<CurveNumerics> &comps)
    {
        std::vector<ResidualComponent> rc;
        rc.reserve(comps.size());
        for (const auto &c : comps) {
            rc.push_back({c, std::nullopt, std::nullopt});
        }
        return SkewLinkageSpec(a, b, std::move(rc));
    }

    std::vector<CurveNumerics> numerics() const
    {
        std::vector<CurveNumerics> out;
        for (const auto &c : components) {
            out.push_back(c.numerics);
        }
        return out;
    }
};

enum class RigidityClass { SuperRigid, Rigid, NotRigid };

constexpr std::string_view name(RigidityClass r)
{
    switch (r) {
        case RigidityClass::SuperRigid:
            return "SuperRigid";
        case RigidityClass::Rigid:
            return "Rigid";
        case RigidityClass::NotRigid:
            return "NotRigid";
    }
    return "?";
}

struct RigidityReport {
    RigidityClass rigidity;
    std::vector<Integer> e;
    bool balanced;
};

inline RigidityReport rigidity(const SkewLinkageSpec &spec)
{
    RigidityReport out{RigidityClass::SuperRigid, {}, spec.n1 == spec.n2};
    for (const auto &c : spec.components) {
        const Integer e = blowup::residual_e(c.numerics.genus, c.numerics.degree, spec.n1);
        out.e.push_back(e);
        if (sign(e) > 0) {
            out.rigidity = RigidityClass::NotRigid;
        } else if (sign(e) == 0 && out.rigidity == RigidityClass::SuperRigid) {
            out.rigidity = RigidityClass::Rigid;
        }
    }
    return out;
}

struct ChamberStructure {
    std::vector<std::vector<std::size_t>> partition; // 0-based component indices, by increasing e/d
    std::vector<Rational> ratios;                    // e/d per block
    std::vector<blowup::CurveClass> rays;
    std::vector<blowup::DivisorClass> walls;
    blowup::EndContraction end_contraction;
    RigidityReport rigidity;

    /// Divisor sequence E, H, D_1, ..., D_k, S_2, S_1 in the order they are met across Eff.
    std::vector<std::pair<std::string, blowup::DivisorClass>> wall_sequence(const Integer &n1,
                                                                           const Integer &n2) const
    {
        std::vector<std::pair<std::string, blowup::DivisorClass>> out;
        out.emplace_back("E", blowup::E);
        out.emplace_back("H", blowup::H);
        for (std::size_t a = 0; a < walls.size(); ++a) {
            out.emplace_back("D_" + std::to_string(a + 1), walls[a]);
        }
        out.emplace_back("S_2", blowup::surface(n2));
        out.emplace_back("S_1", blowup::surface(n1));
        return out;
    }
};

inline ChamberStructure chambers(const SkewLinkageSpec &spec)
{
    ChamberStructure out;
    out.rigidity = rigidity(spec);
    if (out.rigidity.rigidity == RigidityClass::NotRigid) {
        std::vector<std::string> violated;
        for (std::size_t i = 0; i < out.rigidity.e.size(); ++i) {
            if (sign(out.rigidity.e[i]) > 0) {
                violated.push_back("e_" + std::to_string(i + 1) + " = " + to_string(out.rigidity.e[i]) + " <= 0");
            }
        }
        throw NotRigid("linkage is not rigid", violated);
    }
    std::vector<std::size_t> order(spec.components.size());
    std::vector<Rational> ratio(spec.components.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
        ratio[i] = make_rational(out.rigidity.e[i], spec.components[i].numerics.degree);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ratio[a] < ratio[b]; });
    for (std::size_t idx : order) {
        if (out.ratios.empty() || out.ratios.back() != ratio[idx]) {
            out.ratios.push_back(ratio[idx]);
            out.partition.emplace_back();
        }
        out.partition.back().push_back(idx);
    }
    for (const auto &q : out.ratios) {
        out.rays.push_back(blowup::ray_for_ratio(q, spec.n2));
        out.walls.push_back(blowup::wall_for_ratio(q, spec.n2));
    }
    const bool super = out.rigidity.rigidity == RigidityClass::SuperRigid;
    if (out.rigidity.balanced) {
        out.end_contraction = super ? blowup::EndContraction::FibrationToP1 : blowup::EndContraction::Fibration;
    } else {
        out.end_contraction = super ? blowup::EndContraction::DivisorialToPoint : blowup::EndContraction::Divisorial;
    }
    return out;
}

enum class GenericityCase { AboveCanonical, Canonical, BelowCanonical, OutOfRange };

constexpr std::string_view name(GenericityCase c)
{
    switch (c) {
        case GenericityCase::AboveCanonical:
            return "d > 2g-2";
        case GenericityCase::Canonical:
            return "d = 2g-2";
        case GenericityCase::BelowCanonical:
            return "3g/2 <= d < 2g-2";
        case GenericityCase::OutOfRange:
            return "d < 3g/2";
    }
    return "?";
}

/// A dimension estimate for the Q-canonical locus, compared against 4d.
struct DimensionBound {
    std::string expression;
    Integer value;
    bool upper_bound_only; // the locus has dimension < value rather than = value
    bool dominated;        // the estimate leaves the locus of dimension < 4d
};

struct QcanonicalGenericity {
    bool applicable = false;
    bool exceptional = false;
    GenericityCase range = GenericityCase::OutOfRange;
    Integer four_d;
    std::vector<DimensionBound> bounds;
};

/// Whether the Q-canonical locus of (g, d) curves has positive codimension in every
/// component, by comparing dimension counts with the lower bound 4d.
inline QcanonicalGenericity qcanonical_genericity(const Integer &g, const Integer &d)
{
    if (g < 2) {
        throw InvalidArgument("genericity of Q-canonicity needs g >= 2: rational and elliptic curves are always Q-canonical");
    }
    if (d < 1) {
        throw InvalidArgument("degree must be positive");
    }
    QcanonicalGenericity out;
    out.four_d = 4 * d;
    out.exceptional = (g == 3 && d == 4) || (g == 4 && d == 6);
    const Integer canonical = 2 * g - 2;
    if (d > canonical) {
        out.range = GenericityCase::AboveCanonical;
        const Integer v = 4 * d - g;
        out.bounds.push_back({"4d - g", v, false, v < out.four_d});
    } else if (d == canonical) {
        out.range = GenericityCase::Canonical;
        const Integer v = 4 * d - g + 4;
        out.bounds.push_back({"4d - g + 4", v, false, v < out.four_d});
    } else {
        out.range = 2 * d >= 3 * g ? GenericityCase::BelowCanonical : GenericityCase::OutOfRange;
        const Integer gen = 2 * d + 3 * g;
        const Integer hyp = 2 * d + 2 * g + 2;
        out.bounds.push_back({"2d + 3g", gen, true, gen <= out.four_d});
        out.bounds.push_back({"2d + 2g + 2", hyp, false, hyp < out.four_d});
    }
    const bool dominated =
        std::all_of(out.bounds.begin(), out.bounds.end(), [](const DimensionBound &b) { return b.dominated; });
    out.applicable = out.range != GenericityCase::OutOfRange && !out.exceptional && dominated;
    return out;
}

inline constexpr std::string_view h1_surrogate_caveat = "sufficient, not necessary";

struct MainTheoremCheck {
    std::vector<Hypothesis> hypotheses;
    bool hypotheses_ok = false;
    std::optional<LinkedNumerics> result; // the linked (g, d)
    std::string verdict_fragment;
    std::optional<QcanonicalGenericity> genericity;
};

/// Hypotheses of the nef-not-semiample obstruction for curves (n1, n2)-linked to a general
/// (g', d') curve. Violations are reported, not thrown.
inline MainTheoremCheck main_theorem_check(const Integer &gp, const Integer &dp, const Integer &n1, const Integer &n2,
                                           bool acm)
{
    blowup::require_ordered(n1, n2);
    if (sign(gp) < 0 || dp < 1) {
        throw InvalidArgument("(g', d') must have g' >= 0 and d' >= 1");
    }
    MainTheoremCheck out;
    if (gp >= 2) {
        out.genericity = qcanonical_genericity(gp, dp);
        std::string detail = std::string(name(out.genericity->range));
        if (out.genericity->exceptional) {
            detail += ", exceptional pair";
        }
        out.hypotheses.push_back({"non-Q-canonical curves are very general", out.genericity->applicable, detail});
    } else {
        out.hypotheses.push_back(
            {"non-Q-canonical curves are very general", false, "g' < 2: every such curve is Q-canonical"});
    }
    for (const auto &[label, n] : {std::pair<std::string, Integer>{"n1", n1}, {"n2", n2}}) {
        out.hypotheses.push_back(
            check({"super-rigid for " + label + ": 2g' - 2 - (" + label + " - 4)d' < 0", 2 * gp - 2 - (n - 4) * dp,
                   Relation::Less, 0}));
    }
    for (const auto &[label, n] : {std::pair<std::string, Integer>{"n1", n1}, {"n2", n2}}) {
        const std::string hyp = "h^1(I_C'(" + label + " - 4)) = 0";
        if (acm) {
            out.hypotheses.push_back({hyp, true, "ACM residual"});
        } else {
            out.hypotheses.push_back({hyp, n >= dp + 2,
                                      label + " = " + to_string(n) + " >= d' + 2 = " + to_string(dp + 2) + " ("
                                          + std::string(h1_surrogate_caveat) + ")"});
        }
    }
    out.hypotheses.push_back(check({"d' < n1 n2", dp, Relation::Less, n1 * n2}));
    if (dp < n1 * n2) {
        out.result = linked_numerics(gp, dp, n1, n2);
    }
    out.hypotheses_ok = all_hold(out.hypotheses);
    out.verdict_fragment = out.hypotheses_ok ? "NotMDS for very general element" : "criterion not applicable";
    return out;
}

/// (a - b(n1 - 4), b): restriction of aH + bS_2 to the residual, as hyperplane and canonical coefficients.
inline std::pair<Rational, Rational> restriction_coefficients(const Rational &a, const Rational &b, const Integer &n1)
{
    return {a - b * Rational(Integer(n1 - 4)), b};
}

enum class ConditionStatus { Satisfied, Violated, MissingFlag };

constexpr std::string_view name(ConditionStatus s)
{
    switch (s) {
        case ConditionStatus::Satisfied:
            return "Satisfied";
        case ConditionStatus::Violated:
            return "Violated";
        case ConditionStatus::MissingFlag:
            return "MissingFlag";
    }
    return "?";
}

struct ComponentCondition {
    std::size_t index;
    bool top_block;
    std::string branch; // "star", "super-rigid-star" or "subcanonical"
    ConditionStatus status;
    Integer inequality_value; // 4(g - 1) - (n2 - 4)d
    std::string detail;
};

struct ContractibilityReport {
    std::vector<ComponentCondition> components;
    ConditionStatus overall;
    std::string top_branch;
};

namespace detail
{

inline ConditionStatus combine(ConditionStatus a, ConditionStatus b)
{
    if (a == ConditionStatus::Violated || b == ConditionStatus::Violated) {
        return ConditionStatus::Violated;
    }
    if (a == ConditionStatus::MissingFlag || b == ConditionStatus::MissingFlag) {
        return ConditionStatus::MissingFlag;
    }
    return ConditionStatus::Satisfied;
}

inline ComponentCondition star_condition(const ResidualComponent &c, const Integer &n2, std::size_t index, bool top)
{
    ComponentCondition out{index, top, "star", ConditionStatus::Satisfied, 0, ""};
    out.inequality_value = 4 * (c.numerics.genus - 1) - (n2 - 4) * c.numerics.degree;
    ConditionStatus q = ConditionStatus::Satisfied;
    if (!c.qcanonical) {
        q = ConditionStatus::MissingFlag;
        out.detail = "Q-canonicity flag absent";
    } else if (!*c.qcanonical) {
        q = ConditionStatus::Violated;
        out.detail = "not Q-canonical";
    }
    const ConditionStatus ineq =
        sign(out.inequality_value) < 0 ? ConditionStatus::Satisfied : ConditionStatus::Violated;
    if (ineq == ConditionStatus::Violated) {
        if (!out.detail.empty()) {
            out.detail += "; ";
        }
        out.detail += "4(g-1) - (n2-4)d = " + to_string(out.inequality_value) + " >= 0";
    }
    out.status = combine(q, ineq);
    return out;
}

inline ComponentCondition subcanonical_condition(const ResidualComponent &c, const Integer &n2, std::size_t index)
{
    ComponentCondition out{index, true, "subcanonical", ConditionStatus::Satisfied, 0, ""};
    out.inequality_value = 4 * (c.numerics.genus - 1) - (n2 - 4) * c.numerics.degree;
    const Integer target = n2 - 4;
    if (2 * c.numerics.genus - 2 != target * c.numerics.degree) {
        out.status = ConditionStatus::Violated;
        out.detail = "2g - 2 = " + to_string(2 * c.numerics.genus - 2) + " != (n2 - 4)d = "
                     + to_string(target * c.numerics.degree) + ", so K ~ (n2 - 4)H is impossible";
    } else if (!c.subcanonical_level) {
        out.status = ConditionStatus::MissingFlag;
        out.detail = "subcanonical level flag absent (needs " + to_string(target) + ")";
    } else if (*c.subcanonical_level != target) {
        out.status = ConditionStatus::Violated;
        out.detail = "subcanonical level " + to_string(*c.subcanonical_level) + " != " + to_string(target);
    } else {
        out.detail = "K ~ (n2 - 4)H";
    }
    return out;
}

} // namespace detail

/// Sufficient conditions for the residual curves to be potentially contractible.
inline ContractibilityReport potential_contractibility_conditions(const SkewLinkageSpec &spec)
{
    const ChamberStructure ch = chambers(spec);
    const bool super = ch.rigidity.rigidity == RigidityClass::SuperRigid;
    ContractibilityReport out;
    ConditionStatus lower = ConditionStatus::Satisfied;
    for (std::size_t a = 0; a + 1 < ch.partition.size(); ++a) {
        for (std::size_t i : ch.partition[a]) {
            auto c = detail::star_condition(spec.components[i], spec.n2, i, false);
            lower = detail::combine(lower, c.status);
            out.components.push_back(c);
        }
    }
    std::vector<ComponentCondition> branch1, branch2;
    ConditionStatus s1 = super ? ConditionStatus::Satisfied : ConditionStatus::Violated;
    ConditionStatus s2 = ConditionStatus::Satisfied;
    for (std::size_t i : ch.partition.back()) {
        auto c1 = detail::star_condition(spec.components[i], spec.n2, i, true);
        c1.branch = "super-rigid-star";
        if (!super) {
            c1.status = ConditionStatus::Violated;
            c1.detail = c1.detail.empty() ? "linkage is rigid but not super-rigid"
                                          : "linkage is rigid but not super-rigid; " + c1.detail;
        }
        s1 = detail::combine(s1, c1.status);
        branch1.push_back(c1);
        auto c2 = detail::subcanonical_condition(spec.components[i], spec.n2, i);
        s2 = detail::combine(s2, c2.status);
        branch2.push_back(c2);
    }
    ConditionStatus top;
    const std::vector<ComponentCondition> *chosen;
    if (s1 == ConditionStatus::Satisfied) {
        top = s1;
        chosen = &branch1;
    } else if (s2 == ConditionStatus::Satisfied) {
        top = s2;
        chosen = &branch2;
    } else if (s1 == ConditionStatus::MissingFlag) {
        top = s1;
        chosen = &branch1;
    } else if (s2 == ConditionStatus::MissingFlag) {
        top = s2;
        chosen = &branch2;
    } else {
        top = ConditionStatus::Violated;
        chosen = &branch1;
    }
    out.top_branch = chosen->front().branch;
    out.components.insert(out.components.end(), chosen->begin(), chosen->end());
    if (top == ConditionStatus::Violated) {
        // Keep the other branch visible as well when neither applies.
        const auto &other = chosen == &branch1 ? branch2 : branch1;
        out.components.insert(out.components.end(), other.begin(), other.end());
    }
    out.overall = detail::combine(lower, top);
    return out;
}

} // namespace mds::linkage

#endif
