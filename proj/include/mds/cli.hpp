#ifndef MDS_CLI_HPP
#define MDS_CLI_HPP

// Command-line front end. run_cli() is the whole program minus main(), so tests can drive it
// with string vectors and captured streams.
//
// Exit codes: 0 success, 2 invalid input, 3 a criterion's hypotheses fail.

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "mds/blowup.hpp"
#include "mds/classify.hpp"
#include "mds/error.hpp"
#include "mds/hilbert.hpp"
#include "mds/integer.hpp"
#include "mds/k3lattice.hpp"
#include "mds/linkage.hpp"
#include "mds/pell.hpp"
#include "mds/report.hpp"

namespace mds::cli
{

enum ExitCode : int { Ok = 0, InvalidInput = 2, NotApplicable = 3 };

using report::json;
using report::num;
using report::to_json;

namespace detail
{

inline std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

inline std::vector<Integer> integers(std::string_view s, std::size_t expected, std::string_view what)
{
    const auto parts = split(s, ',');
    if (parts.size() != expected) {
        throw InvalidArgument(std::string(what) + " expects " + std::to_string(expected)
                              + " comma-separated integers, got '" + std::string(s) + "'");
    }
    std::vector<Integer> out;
    for (const auto &p : parts) {
        out.push_back(parse_integer(p));
    }
    return out;
}

/// quartic | aci | ci:n1,n2 | on:s | linked:g',d',n1,n2[,acm] | none
inline classify::Evidence parse_evidence(std::string_view text)
{
    namespace ev = classify::evidence;
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    if (head == "quartic" && rest.empty()) {
        return ev::GeneralOnQuartic{};
    }
    if (head == "aci" && rest.empty()) {
        return ev::AlmostCompleteIntersection{};
    }
    if (head == "none" && rest.empty()) {
        return ev::Unspecified{};
    }
    if (head == "ci") {
        const auto v = integers(rest, 2, "ci");
        return ev::CompleteIntersection{v[0], v[1]};
    }
    if (head == "on") {
        return ev::OnSurfaceOfDegree{parse_integer(rest)};
    }
    if (head == "linked") {
        auto parts = split(rest, ',');
        bool acm = false;
        if (parts.size() == 5) {
            if (parts[4] == "acm") {
                acm = true;
            } else if (parts[4] != "noacm") {
                throw InvalidArgument("linked evidence: fifth field must be 'acm' or 'noacm'");
            }
            parts.pop_back();
        }
        if (parts.size() != 4) {
            throw InvalidArgument("linked evidence expects g',d',n1,n2[,acm]");
        }
        return ev::GeneralLinked{parse_integer(parts[0]), parse_integer(parts[1]), parse_integer(parts[2]),
                                 parse_integer(parts[3]), acm};
    }
    throw InvalidArgument("unknown evidence '" + std::string(text) + "'");
}

inline std::string evidence_name(const classify::Evidence &e)
{
    static constexpr std::array<std::string_view, 6> names{
        "CompleteIntersection", "AlmostCompleteIntersection", "OnSurfaceOfDegree",
        "GeneralOnQuartic",     "GeneralLinked",              "Unspecified"};
    return std::string(names[e.index()]);
}

/// "g,d[:q|:nq][:nu=N];..." where q / nq set the Q-canonicity flag and nu the subcanonical level.
inline std::vector<linkage::ResidualComponent> parse_components(std::string_view text)
{
    std::vector<linkage::ResidualComponent> out;
    for (const auto &entry : split(text, ';')) {
        const auto fields = split(entry, ':');
        const auto gd = integers(fields[0], 2, "component");
        linkage::ResidualComponent c{CurveNumerics(gd[0], gd[1]), std::nullopt, std::nullopt};
        for (std::size_t i = 1; i < fields.size(); ++i) {
            const auto &f = fields[i];
            if (f == "q") {
                c.qcanonical = true;
            } else if (f == "nq") {
                c.qcanonical = false;
            } else if (f.rfind("nu=", 0) == 0) {
                c.subcanonical_level = parse_integer(std::string_view(f).substr(3));
            } else {
                throw InvalidArgument("unknown component flag '" + f + "'");
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

struct Format {
    bool json = false;
    bool csv = false;
};

inline void add_format(CLI::App &cmd, Format &f, bool csv)
{
    cmd.add_flag("--json", f.json, "JSON output");
    if (csv) {
        cmd.add_flag("--csv", f.csv, "CSV output");
    }
}

inline void emit(std::ostream &out, const Format &f, const json &env)
{
    if (f.json) {
        out << env.dump(2) << '\n';
    } else {
        report::write_text(out, env);
    }
}

inline json scan_row(const classify::ScanRow &r)
{
    return {{"numerics", to_json(r.numerics)},
            {"r", num(r.r)},
            {"inequality_value", num(r.inequality_value)},
            {"rational", to_json(r.rational)},
            {"elliptic", to_json(r.elliptic)}};
}

} // namespace detail

inline int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    using namespace detail;
    CLI::App app{"Mori dream space criteria for blowups of P^3 along space curves", "mds"};
    app.set_version_flag("--version", MDS_VERSION);
    app.require_subcommand(1);
    Format fmt;

    std::string g, d, evidence, dmax, D, N, n1, n2, components, surface, nn, gp, dp;
    bool raw = false, catalog = false, no_acm = false;

    auto *c_classify = app.add_subcommand("classify", "verdict for (g, d) under the given evidence");
    c_classify->add_option("--g", g, "genus")->required();
    c_classify->add_option("--d", d, "degree")->required();
    c_classify->add_option("--evidence", evidence,
                           "quartic | aci | ci:n1,n2 | on:s | linked:g',d',n1,n2[,acm] | none");
    add_format(*c_classify, fmt, false);

    auto *c_scan = app.add_subcommand("scan", "pairs passing the quartic criterion up to a degree bound");
    c_scan->add_option("--d-max", dmax, "largest degree")->required();
    auto *o_raw = c_scan->add_flag("--raw", raw, "raw hypothesis scan (default)");
    auto *o_cat = c_scan->add_flag("--catalog", catalog, "the four established low-degree components");
    o_raw->excludes(o_cat);
    add_format(*c_scan, fmt, true);

    auto *c_pell = app.add_subcommand("pell", "decide x^2 - D y^2 = N");
    c_pell->add_option("--D", D, "coefficient D >= 0")->required();
    c_pell->add_option("--N", N, "right-hand side")->required();
    add_format(*c_pell, fmt, false);

    auto *c_link = app.add_subcommand("linkage", "numerics of the residual curve");
    c_link->add_option("--g", g, "genus")->required();
    c_link->add_option("--d", d, "degree")->required();
    c_link->add_option("--n1", n1, "first surface degree")->required();
    c_link->add_option("--n2", n2, "second surface degree")->required();
    add_format(*c_link, fmt, false);

    auto *c_ch = app.add_subcommand("chambers", "chamber walls of a rigid skew linkage");
    c_ch->add_option("--n1", n1, "first surface degree")->required();
    c_ch->add_option("--n2", n2, "second surface degree")->required();
    c_ch->add_option("--components", components, "\"g1,d1[:q|:nq][:nu=N];g2,d2;...\"")->required();
    add_format(*c_ch, fmt, false);

    auto *c_cones = app.add_subcommand("cones", "Eff, Mov and Nef for a general curve on a surface");
    c_cones->add_option("--g", g, "genus")->required();
    c_cones->add_option("--d", d, "degree")->required();
    c_cones->add_option("--surface", surface, "surface degree (4)")->required();
    add_format(*c_cones, fmt, false);

    auto *c_fam = app.add_subcommand("family", "the (20n + 1, 5n) quartic family");
    c_fam->add_option("--n", nn, "family index, n >= 7")->required();
    add_format(*c_fam, fmt, false);

    auto *c_no = app.add_subcommand("nonopen", "very general versus Q-canonical specialisation");
    c_no->add_option("--gp", gp, "residual genus g'")->required();
    c_no->add_option("--dp", dp, "residual degree d'")->required();
    c_no->add_option("--n1", n1, "first surface degree")->required();
    c_no->add_option("--n2", n2, "second surface degree")->required();
    c_no->add_flag("--no-acm", no_acm, "do not assume the residual is ACM");
    add_format(*c_no, fmt, false);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::CallForVersion &) {
        out << MDS_VERSION << '\n';
        return Ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        if (!app.get_subcommands().empty()) {
            err << app.get_subcommands().front()->help();
        } else {
            err << app.help();
        }
        return InvalidInput;
    }

    try {
        if (c_classify->parsed()) {
            const CurveNumerics n(parse_integer(g), parse_integer(d));
            const classify::Evidence e = evidence.empty() ? classify::Evidence{classify::evidence::Unspecified{}}
                                                          : parse_evidence(evidence);
            const auto v = classify::classify(n, e);
            json result = to_json(v);
            if (e.index() == 3 && k3::mori_existence(n)) {
                result["r"] = num(k3::discriminant(n));
            }
            emit(out, fmt,
                 report::envelope("classify",
                                  {{"g", num(n.genus)}, {"d", num(n.degree)}, {"evidence", evidence_name(e)}},
                                  result, report::certificates(v), report::citations(v)));
            const bool explicit_evidence = !std::holds_alternative<classify::evidence::Unspecified>(e);
            return explicit_evidence && v.status == Status::Inconclusive ? NotApplicable : Ok;
        }
        if (c_scan->parsed()) {
            const Integer m = parse_integer(dmax);
            if (m < 3) {
                throw InvalidArgument("--d-max must be at least 3");
            }
            json rows = json::array();
            if (catalog) {
                for (const auto &rec : hilbert::low_degree_quartic_catalog()) {
                    if (rec.numerics.degree > m) {
                        continue;
                    }
                    json row = to_json(rec);
                    row["r"] = num(k3::discriminant(rec.numerics));
                    row["inequality_value"] = num(k3::quartic_inequality_value(rec.numerics));
                    rows.push_back(row);
                }
            } else {
                for (const auto &r : classify::theorem1_raw_scan(m)) {
                    rows.push_back(scan_row(r));
                }
            }
            if (fmt.csv) {
                out << "g,d,r,inequality_value," << (catalog ? "dimension,status,note" : "rational,modulus,elliptic")
                    << '\n';
                for (const auto &row : rows) {
                    out << row["numerics"]["g"].get<std::string>() << ',' << row["numerics"]["d"].get<std::string>()
                        << ',' << row["r"].get<std::string>() << ',' << row["inequality_value"].get<std::string>()
                        << ',';
                    if (catalog) {
                        out << row["dimension"].get<std::string>() << ',' << row["status"].get<std::string>() << ",\""
                            << row["notes"][0].get<std::string>() << "\"\n";
                    } else {
                        const auto &rat = row["rational"];
                        out << rat["certificate"].get<std::string>() << ','
                            << (rat.contains("modulus") ? rat["modulus"].get<std::string>() : "") << ','
                            << row["elliptic"]["certificate"].get<std::string>() << '\n';
                    }
                }
                return Ok;
            }
            json result{{"mode", catalog ? "catalog" : "raw"}, {"count", std::to_string(rows.size())}, {"rows", rows}};
            emit(out, fmt, report::envelope("scan", {{"d_max", num(m)}, {"catalog", catalog}}, result));
            return Ok;
        }
        if (c_pell->parsed()) {
            const pell::PellProblem p(parse_integer(D), parse_integer(N));
            const auto o = pell::decide(p);
            emit(out, fmt,
                 report::envelope("pell", to_json(p), {{"solvable", o.solvable}, {"witness", o.witness ? to_json(*o.witness) : json(nullptr)}},
                                  json::array({to_json(o)})));
            return Ok;
        }
        if (c_link->parsed()) {
            const Integer G = parse_integer(g), Dg = parse_integer(d), a = parse_integer(n1), b = parse_integer(n2);
            const auto l = linkage::linked_numerics(G, Dg, a, b);
            json result{{"residual", {{"g", num(l.genus)}, {"d", num(l.degree)}}},
                        {"realizable", l.realizable()},
                        {"degree_sum", num(Integer(Dg + l.degree))}};
            emit(out, fmt,
                 report::envelope("linkage", {{"g", num(G)}, {"d", num(Dg)}, {"n1", num(a)}, {"n2", num(b)}}, result));
            return l.realizable() ? Ok : NotApplicable;
        }
        if (c_ch->parsed()) {
            const linkage::SkewLinkageSpec spec(parse_integer(n1), parse_integer(n2), parse_components(components));
            const auto ch = linkage::chambers(spec);
            const auto cones = blowup::cones_super_rigid(spec.n1, spec.n2, spec.numerics());
            json partition = json::array(), ratios = json::array(), rays = json::array(), walls = json::array();
            for (std::size_t a = 0; a < ch.partition.size(); ++a) {
                json block = json::array();
                for (auto i : ch.partition[a]) {
                    block.push_back(std::to_string(i + 1));
                }
                partition.push_back(block);
                ratios.push_back(num(ch.ratios[a]));
                rays.push_back(to_json(ch.rays[a]));
                walls.push_back(to_json(ch.walls[a]));
            }
            json seq = json::array();
            for (const auto &[label, cls] : ch.wall_sequence(spec.n1, spec.n2)) {
                seq.push_back({{"label", label}, {"class", to_json(cls)}});
            }
            json e = json::array();
            for (const auto &x : ch.rigidity.e) {
                e.push_back(num(x));
            }
            json comps = json::array();
            for (const auto &c : spec.components) {
                comps.push_back(to_json(c.numerics));
            }
            json result{{"rigidity", linkage::name(ch.rigidity.rigidity)},
                        {"balanced", ch.rigidity.balanced},
                        {"e", e},
                        {"partition", partition},
                        {"ratios", ratios},
                        {"rays", rays},
                        {"walls", walls},
                        {"wall_sequence", seq},
                        {"end_contraction", blowup::name(ch.end_contraction)},
                        {"cones", to_json(cones.cones)},
                        {"contractibility", to_json(linkage::potential_contractibility_conditions(spec))}};
            emit(out, fmt,
                 report::envelope("chambers", {{"n1", num(spec.n1)}, {"n2", num(spec.n2)}, {"components", comps}},
                                  result));
            return Ok;
        }
        if (c_cones->parsed()) {
            const CurveNumerics n(parse_integer(g), parse_integer(d));
            const auto c = blowup::cones_extremal_surface(n, parse_integer(surface));
            json k3rays = json::array();
            for (const auto &r : c.k3_cone.rays) {
                k3rays.push_back(to_json(r));
            }
            json result{{"r", num(c.r)},
                        {"cones", to_json(c.cones)},
                        {"boundary_irrational", c.boundary_irrational},
                        {"k3_cone", {{"rays", k3rays}, {"closed", c.k3_cone.closed}}},
                        {"hypotheses", to_json(c.check.hypotheses)}};
            emit(out, fmt,
                 report::envelope("cones", {{"g", num(n.genus)}, {"d", num(n.degree)}, {"surface", num(parse_integer(surface))}}, result));
            return Ok;
        }
        if (c_fam->parsed()) {
            const Integer k = parse_integer(nn);
            const auto f = hilbert::large_family(k);
            const auto v = classify::classify(f.record.numerics, classify::evidence::GeneralOnQuartic{});
            const auto &c = f.certificate;
            json cert{{"r", num(c.r)},
                      {"r_equals_d_times_d_minus_32", c.r_matches_product},
                      {"rational_sieve", c.rational_sieve ? num(c.rational_sieve->modulus) : json(nullptr)},
                      {"nonsquare", c.nonsquare},
                      {"floor_sqrt", num(c.floor_sqrt)},
                      {"odd_valuation_prime", report::opt(c.odd_valuation_prime)},
                      {"valuation", std::to_string(c.valuation)}};
            json result{{"record", to_json(f.record)}, {"certificate", cert}, {"verdict", to_json(v)}};
            emit(out, fmt,
                 report::envelope("family", {{"n", num(k)}}, result, report::certificates(v), report::citations(v)));
            return v.status == Status::NotMDS ? Ok : NotApplicable;
        }
        if (c_no->parsed()) {
            const Integer G = parse_integer(gp), Dg = parse_integer(dp), a = parse_integer(n1), b = parse_integer(n2);
            const auto rep = classify::non_openness_witness(G, Dg, a, b, !no_acm);
            json certs = json::array(), cites = json::array();
            json result{{"numerics", to_json(rep.numerics)}, {"notes", rep.notes}};
            if (rep.very_general) {
                result["very_general"] = to_json(*rep.very_general);
                for (auto &x : report::certificates(*rep.very_general)) {
                    certs.push_back(x);
                }
                for (auto &x : report::citations(*rep.very_general)) {
                    cites.push_back(x);
                }
            } else {
                result["very_general"] = nullptr;
            }
            result["special"] = to_json(rep.special);
            result["contractibility"] = to_json(rep.contractibility);
            for (auto &x : report::certificates(rep.special)) {
                certs.push_back(x);
            }
            for (auto &x : report::citations(rep.special)) {
                cites.push_back(x);
            }
            emit(out, fmt,
                 report::envelope("nonopen",
                                  {{"g_prime", num(G)}, {"d_prime", num(Dg)}, {"n1", num(a)}, {"n2", num(b)}, {"acm", !no_acm}},
                                  result, certs, cites));
            return Ok;
        }
    } catch (const HypothesisFailure &e) {
        err << "hypothesis failure: " << e.what() << '\n';
        for (const auto &v : e.violated()) {
            err << "  violated: " << v << '\n';
        }
        return NotApplicable;
    } catch (const InvalidArgument &e) {
        err << "invalid input: " << e.what() << '\n';
        return InvalidInput;
    }
    return InvalidInput;
}

} // namespace mds::cli

#endif
