#ifndef MDS_CLASSIFY_HPP
#define MDS_CLASSIFY_HPP

// Verdict engine: evaluates the applicable criterion for given numerics and evidence.
// Evidence is trusted as given; the engine checks only the numeric side of each criterion.

#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "mds/blowup.hpp"
#include "mds/common.hpp"
#include "mds/error.hpp"
#include "mds/hilbert.hpp"
#include "mds/integer.hpp"
#include "mds/k3lattice.hpp"
#include "mds/linkage.hpp"
#include "mds/numerics.hpp"
#include "mds/pell.hpp"

namespace mds::classify
{

namespace evidence
{
struct CompleteIntersection {
    Integer n1;
    Integer n2;
};
struct AlmostCompleteIntersection {
};
struct OnSurfaceOfDegree {
    Integer s;
};
struct GeneralOnQuartic {
};
struct GeneralLinked {
    Integer g_prime;
    Integer d_prime;
    Integer n1;
    Integer n2;
    bool acm;
};
struct Unspecified {
};
} // namespace evidence

using Evidence = std::variant<evidence::CompleteIntersection, evidence::AlmostCompleteIntersection,
                              evidence::OnSurfaceOfDegree, evidence::GeneralOnQuartic, evidence::GeneralLinked,
                              evidence::Unspecified>;

struct Citation {
    std::string id;
    std::string statement;
};

namespace citations
{
inline Citation aci()
{
    return {"aci-mds", "blowups along complete and almost complete intersection curves are Mori dream spaces"};
}
inline Citation low_degree()
{
    return {"low-degree-surface-mds",
            "a curve on a surface of degree at most 3 gives a blowup carrying a dlt log-Fano pair"};
}
inline Citation quadric()
{
    return {"quadric-curves", "curves of maximal genus for their degree lie on a quadric"};
}
inline Citation quartic()
{
    return {"quartic-irrational-cone",
            "general curves on Picard-rank-2 quartics with no (-2)- or 0-classes give an irrational movable cone"};
}
inline Citation super_rigid()
{
    return {"super-rigid-linkage-obstruction",
            "curves super-rigidly linked to a very general non-Q-canonical curve carry a nef non-semiample divisor"};
}
inline Citation degeneration()
{
    return {"q-canonical-degeneration",
            "specialising the residual to a Q-canonical curve makes every nef divisor semiample"};
}
inline Citation contractibility()
{
    return {"potential-contractibility",
            "a skew rigid linkage blowup is a Mori dream space iff the residual curves are potentially contractible"};
}
} // namespace citations

struct Certificate {
    std::string label;
    std::optional<pell::PellOutcome> pell;
    std::vector<Hypothesis> hypotheses;
    std::optional<blowup::DivisorRay> boundary_ray;
};

struct Verdict {
    Status status = Status::Inconclusive;
    std::optional<Quantifier> quantifier;
    std::optional<Obstruction> obstruction;
    std::vector<Citation> citations;
    std::vector<Certificate> certificates;
    std::vector<std::string> notes;
};

namespace detail
{

inline Verdict mds_every(Citation c)
{
    Verdict v;
    v.status = Status::MDS;
    v.quantifier = Quantifier::EveryElement;
    v.citations.push_back(std::move(c));
    return v;
}

inline Verdict on_quartic(const CurveNumerics &n)
{
    const auto check = k3::quartic_obstruction_hypotheses(n);
    Verdict v;
    Certificate hyps{"quartic criterion hypotheses", std::nullopt, check.hypotheses, std::nullopt};
    if (check.pell) {
        v.certificates.push_back({"x^2 - r y^2 = -8", check.pell->rational, {}, std::nullopt});
        v.certificates.push_back({"x^2 - r y^2 = 0", check.pell->elliptic, {}, std::nullopt});
    }
    if (!check.ok()) {
        v.certificates.push_back(std::move(hyps));
        v.notes.push_back("quartic criterion does not apply");
        return v;
    }
    const auto cones = blowup::cones_extremal_surface(n, 4);
    hyps.boundary_ray = cones.cones.movable.second;
    v.certificates.push_back(std::move(hyps));
    v.status = Status::NotMDS;
    v.quantifier = Quantifier::GeneralElement;
    v.obstruction = Obstruction::IrrationalMovableRay;
    v.citations.push_back(citations::quartic());
    return v;
}

inline Verdict linked(const CurveNumerics &n, const evidence::GeneralLinked &e)
{
    if (e.n1 < 1 || e.n2 < 1 || e.n1 > e.n2 || sign(e.g_prime) < 0 || e.d_prime < 1) {
        throw InvalidEvidence("linked evidence needs 1 <= n1 <= n2, g' >= 0, d' >= 1");
    }
    if (e.d_prime < e.n1 * e.n2) {
        const auto back = linkage::linked_numerics(e.g_prime, e.d_prime, e.n1, e.n2);
        if (back.genus != n.genus || back.degree != n.degree) {
            throw InvalidEvidence("linking (" + to_string(e.g_prime) + "," + to_string(e.d_prime) + ") by ("
                                  + to_string(e.n1) + "," + to_string(e.n2) + ") gives ("
                                  + to_string(back.genus) + "," + to_string(back.degree) + "), not "
                                  + n.to_string());
        }
    }
    const auto check = linkage::main_theorem_check(e.g_prime, e.d_prime, e.n1, e.n2, e.acm);
    Verdict v;
    v.certificates.push_back({"linkage obstruction hypotheses", std::nullopt, check.hypotheses, std::nullopt});
    if (!check.hypotheses_ok) {
        v.notes.push_back("linkage criterion does not apply");
        return v;
    }
    v.status = Status::NotMDS;
    v.quantifier = Quantifier::VeryGeneralElement;
    v.obstruction = Obstruction::NefNotSemiample;
    v.citations.push_back(citations::super_rigid());
    v.notes.push_back(check.verdict_fragment);
    return v;
}

inline Verdict unspecified(const CurveNumerics &n)
{
    if (n.genus == hilbert::quadric_extremal_genus(n.degree)) {
        Verdict v = mds_every(citations::quadric());
        v.citations.push_back(citations::low_degree());
        v.notes.push_back("g = " + to_string(n.genus) + " is the maximal genus of degree-" + to_string(n.degree)
                          + " curves, so every such curve lies on a quadric");
        return v;
    }
    if (n.genus == 8 && n.degree == 8) {
        Verdict v = mds_every(citations::quadric());
        v.citations.push_back(citations::low_degree());
        v.notes.push_back("every (8,8) curve is of type (3,5) on a quadric");
        return v;
    }
    Verdict v;
    v.notes.push_back("no criterion applies without further evidence");
    return v;
}

} // namespace detail

inline Verdict classify(const CurveNumerics &n, const Evidence &e)
{
    return std::visit(
        [&](const auto &ev) -> Verdict {
            using T = std::decay_t<decltype(ev)>;
            if constexpr (std::is_same_v<T, evidence::CompleteIntersection>) {
                if (ev.n1 < 1 || ev.n2 < 1) {
                    throw InvalidEvidence("complete intersection degrees must be positive");
                }
                const auto rec = hilbert::ci_numerics(ev.n1, ev.n2);
                if (rec.numerics != n) {
                    throw InvalidEvidence("a (" + to_string(ev.n1) + "," + to_string(ev.n2)
                                          + ") complete intersection has numerics " + rec.numerics.to_string()
                                          + ", not " + n.to_string());
                }
                return detail::mds_every(citations::aci());
            } else if constexpr (std::is_same_v<T, evidence::AlmostCompleteIntersection>) {
                return detail::mds_every(citations::aci());
            } else if constexpr (std::is_same_v<T, evidence::OnSurfaceOfDegree>) {
                if (ev.s < 1 || ev.s > 3) {
                    throw InvalidEvidence("surface degree must be 1, 2 or 3, got " + to_string(ev.s));
                }
                return detail::mds_every(citations::low_degree());
            } else if constexpr (std::is_same_v<T, evidence::GeneralOnQuartic>) {
                return detail::on_quartic(n);
            } else if constexpr (std::is_same_v<T, evidence::GeneralLinked>) {
                return detail::linked(n, ev);
            } else {
                return detail::unspecified(n);
            }
        },
        e);
}

struct ScanRow {
    CurveNumerics numerics;
    Integer r;
    pell::PellOutcome rational; // x^2 - r y^2 = -8
    pell::PellOutcome elliptic; // x^2 - r y^2 = 0
    Integer inequality_value;   // 64 - 8d + 2g - 2
};

/// Every (g, d) with d <= d_max passing the raw quartic-criterion hypotheses, ordered by (d, g).
inline std::vector<ScanRow> theorem1_raw_scan(const Integer &d_max)
{
    if (d_max < 3) {
        throw InvalidArgument("d_max must be at least 3");
    }
    std::vector<ScanRow> out;
    for (Integer d = 1; d <= d_max; ++d) {
        for (Integer g = 0; 8 * g < d * d; ++g) {
            const CurveNumerics n(g, d);
            const Integer value = k3::quartic_inequality_value(n);
            if (d < 16 && sign(value) > 0) {
                continue;
            }
            const Integer r = k3::discriminant(n);
            if (is_perfect_square(r)) {
                continue;
            }
            auto rat = pell::decide(pell::PellProblem(r, -8));
            if (rat.solvable) {
                continue;
            }
            out.push_back({n, r, std::move(rat), pell::decide(pell::PellProblem(r, 0)), value});
        }
    }
    return out;
}

struct NonOpennessReport {
    CurveNumerics numerics; // the linked (g, d)
    std::optional<Verdict> very_general;
    Verdict special;
    linkage::ContractibilityReport contractibility;
    linkage::MainTheoremCheck check;
    std::vector<std::string> notes;
};

/// Pairs the very general obstruction with the Q-canonical specialisation of the residual.
inline NonOpennessReport non_openness_witness(const Integer &gp, const Integer &dp, const Integer &n1,
                                              const Integer &n2, bool acm = true)
{
    auto check = linkage::main_theorem_check(gp, dp, n1, n2, acm);
    std::vector<std::string> violated;
    for (std::size_t i = 0; i < check.hypotheses.size(); ++i) {
        // The genericity hypothesis is vacuous for g' < 2: every residual is Q-canonical.
        if (i == 0 && gp < 2) {
            continue;
        }
        if (!check.hypotheses[i].holds) {
            violated.push_back(check.hypotheses[i].name);
        }
    }
    if (!violated.empty()) {
        throw HypothesisFailure("linkage obstruction hypotheses fail for (" + to_string(gp) + "," + to_string(dp)
                                    + ") with (n1, n2) = (" + to_string(n1) + "," + to_string(n2) + ")",
                                violated);
    }
    const auto linked = *check.result;
    NonOpennessReport out{CurveNumerics(linked.genus, linked.degree), std::nullopt, {}, {}, check, {}};
    const linkage::SkewLinkageSpec spec(n1, n2, {{CurveNumerics(gp, dp), true, std::nullopt}});
    out.contractibility = linkage::potential_contractibility_conditions(spec);
    if (check.hypotheses_ok) {
        Verdict v;
        v.status = Status::NotMDS;
        v.quantifier = Quantifier::VeryGeneralElement;
        v.obstruction = Obstruction::NefNotSemiample;
        v.citations.push_back(citations::super_rigid());
        v.certificates.push_back({"linkage obstruction hypotheses", std::nullopt, check.hypotheses, std::nullopt});
        out.very_general = v;
    } else {
        out.notes.push_back("g' < 2: every residual is Q-canonical, so the very general branch is empty and a "
                            + std::string(gp == 0 ? "rational" : "elliptic") + " residual gives no obstruction");
    }
    Verdict s;
    s.quantifier = gp < 2 ? Quantifier::GeneralElement : Quantifier::SpecialLocus;
    s.citations.push_back(citations::degeneration());
    s.citations.push_back(citations::contractibility());
    std::vector<Hypothesis> hs;
    for (const auto &c : out.contractibility.components) {
        hs.push_back({"component " + std::to_string(c.index + 1) + " (" + c.branch + ")",
                      c.status == linkage::ConditionStatus::Satisfied, c.detail});
    }
    s.certificates.push_back({"potential contractibility", std::nullopt, hs, std::nullopt});
    if (out.contractibility.overall == linkage::ConditionStatus::Satisfied) {
        s.status = Status::MDS;
    } else {
        s.status = Status::Inconclusive;
        s.notes.push_back("potential contractibility conditions not met: "
                          + std::string(linkage::name(out.contractibility.overall)));
    }
    out.special = s;
    return out;
}

} // namespace mds::classify

#endif
