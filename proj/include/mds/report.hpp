#ifndef MDS_REPORT_HPP
#define MDS_REPORT_HPP

// JSON rendering of library results. Every number is a decimal string; surds are
// {a, b, radicand} triples.

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mds/blowup.hpp"
#include "mds/classify.hpp"
#include "mds/common.hpp"
#include "mds/hilbert.hpp"
#include "mds/integer.hpp"
#include "mds/k3lattice.hpp"
#include "mds/linkage.hpp"
#include "mds/numerics.hpp"
#include "mds/pell.hpp"
#include "mds/surd.hpp"

#ifndef MDS_VERSION
#define MDS_VERSION "0.1.0"
#endif

namespace mds::report
{

using json = nlohmann::ordered_json;

inline json num(const Integer &n)
{
    return n.get_str();
}

inline json num(const Rational &q)
{
    return q.get_str();
}

template <class T>
json opt(const std::optional<T> &v)
{
    return v ? num(*v) : json(nullptr);
}

inline json to_json(const QuadraticSurd &s)
{
    return {{"a", num(s.rational_part())}, {"b", num(s.irrational_part())}, {"radicand", num(s.radicand())}};
}

inline json to_json(const CurveNumerics &n)
{
    return {{"g", num(n.genus)}, {"d", num(n.degree)}};
}

inline json to_json(const Hypothesis &h)
{
    return {{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}};
}

inline json to_json(const std::vector<Hypothesis> &hs)
{
    json out = json::array();
    for (const auto &h : hs) {
        out.push_back(to_json(h));
    }
    return out;
}

inline json to_json(const pell::PellSolution &s)
{
    return {{"x", num(s.x)}, {"y", num(s.y)}};
}

inline json to_json(const pell::PellProblem &p)
{
    return {{"D", num(p.D)}, {"N", num(p.N)}};
}

inline json to_json(const pell::PellOutcome &o)
{
    json out{{"equation", "x^2 - " + to_string(o.problem.D) + " y^2 = " + to_string(o.problem.N)},
             {"problem", to_json(o.problem)},
             {"solvable", o.solvable},
             {"certificate", pell::name(o.certificate)},
             {"witness", o.witness ? to_json(*o.witness) : json(nullptr)}};
    if (o.modulus) {
        out["modulus"] = num(*o.modulus);
    }
    out["searched"] = to_json(o.searched);
    out["halvings"] = std::to_string(o.halvings);
    if (o.unit) {
        out["unit"] = to_json(*o.unit);
    }
    if (o.y_bound) {
        out["y_bound"] = num(*o.y_bound);
    }
    return out;
}

inline json to_json(const blowup::DivisorClass &D)
{
    return {{"H", num(D.h)}, {"E", num(D.e)}};
}

inline json to_json(const blowup::CurveClass &c)
{
    return {{"l", num(c.l)}, {"f", num(c.f)}};
}

inline json to_json(const blowup::DivisorRay &r)
{
    return {{"H", to_json(r.h)}, {"E", to_json(r.e)}, {"rational", r.rational()}, {"text", r.to_string()}};
}

inline json to_json(const blowup::Cone2 &c)
{
    return {{"generators", json::array({to_json(c.first), to_json(c.second)})}, {"rational", c.rational()}};
}

inline json to_json(const blowup::ConePair &c)
{
    return {{"effective", to_json(c.effective)},
            {"movable", to_json(c.movable)},
            {"nef", to_json(c.nef)},
            {"nested", c.nested()}};
}

inline json to_json(const k3::LatticeRay &r)
{
    return {{"H", to_json(r.h)}, {"C", to_json(r.c)}, {"rational", r.rational()}};
}

inline json to_json(const classify::Citation &c)
{
    return {{"id", c.id}, {"statement", c.statement}};
}

inline json to_json(const classify::Certificate &c)
{
    json out{{"label", c.label}};
    if (c.pell) {
        out["pell"] = to_json(*c.pell);
    }
    if (!c.hypotheses.empty()) {
        out["hypotheses"] = to_json(c.hypotheses);
    }
    if (c.boundary_ray) {
        out["boundary_ray"] = to_json(*c.boundary_ray);
    }
    return out;
}

inline json to_json(const classify::Verdict &v)
{
    json out{{"status", name(v.status)},
             {"quantifier", v.quantifier ? json(name(*v.quantifier)) : json(nullptr)},
             {"obstruction", v.obstruction ? json(name(*v.obstruction)) : json(nullptr)},
             {"notes", v.notes}};
    json c = json::array();
    for (const auto &x : v.citations) {
        c.push_back(x.id);
    }
    out["citations"] = c;
    return out;
}

inline json certificates(const classify::Verdict &v)
{
    json out = json::array();
    for (const auto &c : v.certificates) {
        out.push_back(to_json(c));
    }
    return out;
}

inline json citations(const classify::Verdict &v)
{
    json out = json::array();
    for (const auto &c : v.citations) {
        out.push_back(to_json(c));
    }
    return out;
}

inline json to_json(const hilbert::LinkageStep &s)
{
    return {{"n1", num(s.n1)}, {"n2", num(s.n2)}, {"from", to_json(s.from)}, {"to", to_json(s.to)}};
}

inline json to_json(const hilbert::ComponentRecord &r)
{
    json out{{"numerics", to_json(r.numerics)},
             {"family", hilbert::name(r.family)},
             {"parameters", r.parameters},
             {"dimension", opt(r.dimension)},
             {"status", hilbert::name(r.status)},
             {"verdict_hint", name(r.verdict_hint)},
             {"conditions", to_json(r.conditions)},
             {"notes", r.notes}};
    if (!r.linkage_chain.empty()) {
        json chain = json::array();
        for (const auto &s : r.linkage_chain) {
            chain.push_back(to_json(s));
        }
        out["linkage_chain"] = chain;
    }
    return out;
}

inline json to_json(const linkage::ComponentCondition &c)
{
    return {{"component", std::to_string(c.index + 1)},
            {"top_block", c.top_block},
            {"branch", c.branch},
            {"status", linkage::name(c.status)},
            {"inequality_value", num(c.inequality_value)},
            {"detail", c.detail}};
}

inline json to_json(const linkage::ContractibilityReport &r)
{
    json comps = json::array();
    for (const auto &c : r.components) {
        comps.push_back(to_json(c));
    }
    return {{"overall", linkage::name(r.overall)}, {"top_branch", r.top_branch}, {"components", comps}};
}

inline json envelope(const std::string &command, json inputs, json result, json certs = json::array(),
                     json cites = json::array())
{
    return {{"command", command},
            {"inputs", std::move(inputs)},
            {"result", std::move(result)},
            {"certificates", std::move(certs)},
            {"citations", std::move(cites)},
            {"version", MDS_VERSION}};
}

namespace detail
{

inline bool scalar(const json &j)
{
    return !j.is_object() && !j.is_array();
}

inline std::string flat(const json &j)
{
    if (j.is_string()) {
        return j.get<std::string>();
    }
    if (j.is_null()) {
        return "-";
    }
    return j.dump();
}

inline void text(std::ostream &os, const json &j, int depth)
{
    const std::string pad(2 * depth, ' ');
    if (j.is_object()) {
        for (const auto &[k, v] : j.items()) {
            if (scalar(v)) {
                os << pad << k << ": " << flat(v) << '\n';
            } else if (v.empty()) {
                os << pad << k << ": (none)\n";
            } else {
                os << pad << k << ":\n";
                text(os, v, depth + 1);
            }
        }
    } else if (j.is_array()) {
        for (const auto &v : j) {
            if (scalar(v)) {
                os << pad << "- " << flat(v) << '\n';
            } else {
                os << pad << "-\n";
                text(os, v, depth + 1);
            }
        }
    } else {
        os << pad << flat(j) << '\n';
    }
}

} // namespace detail

/// Indented key/value rendering of an envelope, for terminals.
inline void write_text(std::ostream &os, const json &env)
{
    detail::text(os, env, 0);
}

} // namespace mds::report

#endif
