#ifndef MDS_COMMON_HPP
#define MDS_COMMON_HPP

#include <string>
#include <string_view>
#include <vector>

#include "mds/integer.hpp"

namespace mds
{

enum class Status { MDS, NotMDS, Inconclusive };

/// Which elements of a family a verdict applies to.
enum class Quantifier {
    EveryElement,
    GeneralElement,     // a dense open subset
    VeryGeneralElement, // complement of countably many proper closed subsets
    SpecialLocus        // a positive-codimension locus singled out by an extra condition
};

enum class Obstruction { IrrationalMovableRay, NefNotSemiample };

constexpr std::string_view name(Status s)
{
    switch (s) {
        case Status::MDS:
            return "MDS";
        case Status::NotMDS:
            return "NotMDS";
        case Status::Inconclusive:
            return "Inconclusive";
    }
    return "?";
}

constexpr std::string_view name(Quantifier q)
{
    switch (q) {
        case Quantifier::EveryElement:
            return "EveryElement";
        case Quantifier::GeneralElement:
            return "GeneralElement";
        case Quantifier::VeryGeneralElement:
            return "VeryGeneralElement";
        case Quantifier::SpecialLocus:
            return "SpecialLocus";
    }
    return "?";
}

constexpr std::string_view name(Obstruction o)
{
    switch (o) {
        case Obstruction::IrrationalMovableRay:
            return "IrrationalMovableRay";
        case Obstruction::NefNotSemiample:
            return "NefNotSemiample";
    }
    return "?";
}

enum class Relation { Less, LessEqual, Greater, GreaterEqual, Equal, NotEqual };

constexpr std::string_view name(Relation r)
{
    switch (r) {
        case Relation::Less:
            return "<";
        case Relation::LessEqual:
            return "<=";
        case Relation::Greater:
            return ">";
        case Relation::GreaterEqual:
            return ">=";
        case Relation::Equal:
            return "==";
        case Relation::NotEqual:
            return "!=";
    }
    return "?";
}

/// A named integer comparison, kept with both sides so it can be re-checked.
struct Inequality {
    std::string name;
    Integer lhs;
    Relation relation;
    Integer rhs;

    bool holds() const
    {
        switch (relation) {
            case Relation::Less:
                return lhs < rhs;
            case Relation::LessEqual:
                return lhs <= rhs;
            case Relation::Greater:
                return lhs > rhs;
            case Relation::GreaterEqual:
                return lhs >= rhs;
            case Relation::Equal:
                return lhs == rhs;
            case Relation::NotEqual:
                return lhs != rhs;
        }
        return false;
    }
};

/// A hypothesis of some criterion together with whether it holds.
struct Hypothesis {
    std::string name;
    bool holds;
    std::string detail;
};

inline Hypothesis check(const Inequality &ineq)
{
    return {ineq.name, ineq.holds(),
            to_string(ineq.lhs) + " " + std::string(name(ineq.relation)) + " " + to_string(ineq.rhs)};
}

inline std::vector<std::string> violated_names(const std::vector<Hypothesis> &hs)
{
    std::vector<std::string> out;
    for (const auto &h : hs) {
        if (!h.holds) {
            out.push_back(h.name);
        }
    }
    return out;
}

inline bool all_hold(const std::vector<Hypothesis> &hs)
{
    for (const auto &h : hs) {
        if (!h.holds) {
            return false;
        }
    }
    return true;
}

} // namespace mds

#endif
