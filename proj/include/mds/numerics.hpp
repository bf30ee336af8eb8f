#ifndef MDS_NUMERICS_HPP
#define MDS_NUMERICS_HPP

#include <string>
#include <utility>

#include "mds/error.hpp"
#include "mds/integer.hpp"

namespace mds
{

/// Genus and degree of a space curve.
struct CurveNumerics {
    Integer genus;
    Integer degree;

    CurveNumerics() : genus(0), degree(1) {}
    CurveNumerics(Integer g, Integer d) : genus(std::move(g)), degree(std::move(d))
    {
        if (sign(genus) < 0) {
            throw InvalidArgument("genus must be non-negative, got " + mds::to_string(genus));
        }
        if (degree < 1) {
            throw InvalidArgument("degree must be positive, got " + mds::to_string(degree));
        }
    }

    friend bool operator==(const CurveNumerics &, const CurveNumerics &) = default;

    friend bool operator<(const CurveNumerics &a, const CurveNumerics &b)
    {
        if (a.degree != b.degree) {
            return a.degree < b.degree;
        }
        return a.genus < b.genus;
    }

    std::string to_string() const
    {
        return "(" + genus.get_str() + "," + degree.get_str() + ")";
    }
};

} // namespace mds

#endif
