#ifndef MDS_PELL_HPP
#define MDS_PELL_HPP

// Decision procedure for generalized Pell equations x^2 - D y^2 = N.
//
// Non-square D uses the Lagrange-Matthews-Mollin reduction: every solution class of
// x^2 - D y^2 = N is reached by a continued-fraction (PQa) run started at one of
// finitely many (P0, Q0) pairs, so the search terminates with a definite answer.

#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "mds/error.hpp"
#include "mds/integer.hpp"

namespace mds::pell
{

struct PellProblem {
    Integer D;
    Integer N;

    PellProblem() = default;
    PellProblem(Integer d, Integer n) : D(std::move(d)), N(std::move(n))
    {
        if (sign(D) < 0) {
            throw InvalidArgument("Pell coefficient D must be non-negative, got " + to_string(D));
        }
    }

    friend bool operator==(const PellProblem &, const PellProblem &) = default;
};

struct PellSolution {
    Integer x;
    Integer y;

    friend bool operator==(const PellSolution &, const PellSolution &) = default;
};

inline bool satisfies(const PellProblem &p, const PellSolution &s)
{
    return s.x * s.x - p.D * s.y * s.y == p.N;
}

enum class CertificateKind { WitnessFound, ModulusSieve, SquareTestFailed, FundamentalSearchExhausted };

constexpr std::string_view name(CertificateKind k)
{
    switch (k) {
        case CertificateKind::WitnessFound:
            return "WitnessFound";
        case CertificateKind::ModulusSieve:
            return "ModulusSieve";
        case CertificateKind::SquareTestFailed:
            return "SquareTestFailed";
        case CertificateKind::FundamentalSearchExhausted:
            return "FundamentalSearchExhausted";
    }
    return "?";
}

/// A modulus m for which the (reduced) congruence x^2 - D y^2 = N mod m has no solution.
struct SieveCertificate {
    Integer modulus;
    PellProblem reduced; // the problem after the x = 2u substitutions
    unsigned halvings = 0;
};

struct PellOutcome {
    PellProblem problem;
    bool solvable = false;
    std::optional<PellSolution> witness;
    CertificateKind certificate = CertificateKind::FundamentalSearchExhausted;
    std::optional<Integer> modulus; // set for ModulusSieve
    PellProblem searched;           // problem actually searched, after even reduction
    unsigned halvings = 0;
    std::optional<PellSolution> unit;  // fundamental unit of the searched D, when computed
    std::optional<Integer> y_bound;    // Nagell bound on y for fundamental solutions of `searched`
};

inline const std::vector<Integer> &default_moduli()
{
    static const std::vector<Integer> moduli{3, 4, 5, 7, 8, 9, 11, 13, 16};
    return moduli;
}

/// Repeatedly replaces (D, N) by (D/4, N/4) while both are divisible by 4 and N != 0.
/// Solutions correspond through x = 2^h u with y unchanged.
inline std::pair<PellProblem, unsigned> even_reduction(const PellProblem &p)
{
    PellProblem q = p;
    unsigned h = 0;
    while (sign(q.N) != 0 && sign(q.D) != 0 && divides(4, q.D) && divides(4, q.N)) {
        q.D /= 4;
        q.N /= 4;
        ++h;
    }
    return {q, h};
}

/// True when x^2 - D y^2 = N has a solution modulo m, by exhaustion over residues.
inline bool solvable_mod(const PellProblem &p, const Integer &m)
{
    const unsigned long mm = m.get_ui();
    std::vector<char> is_square(mm, 0);
    for (unsigned long x = 0; x < mm; ++x) {
        is_square[(x * x) % mm] = 1;
    }
    const unsigned long dm = mod(p.D, m).get_ui();
    const unsigned long nm = mod(p.N, m).get_ui();
    for (unsigned long y = 0; y < mm; ++y) {
        const unsigned long rhs = (nm + dm * ((y * y) % mm)) % mm;
        if (is_square[rhs]) {
            return true;
        }
    }
    return false;
}

/// First modulus in `moduli` ruling out the equation, after even reduction.
/// A missing certificate proves nothing.
inline std::optional<SieveCertificate> sieve(const PellProblem &p,
                                             const std::vector<Integer> &moduli = default_moduli())
{
    for (const auto &m : moduli) {
        if (m < 2) {
            throw InvalidArgument("sieve modulus must be at least 2, got " + to_string(m));
        }
    }
    if (sign(p.N) == 0) {
        return std::nullopt;
    }
    auto [q, h] = even_reduction(p);
    for (const auto &m : moduli) {
        if (!solvable_mod(q, m)) {
            return SieveCertificate{m, q, h};
        }
    }
    return std::nullopt;
}

namespace detail
{

/// Runs PQa on (P0 + sqrt(D)) / Q0 and returns, for the first i >= 1 with Q_i = +-1,
/// the pair (G_{i-1}, B_{i-1}); nullopt when a (P, Q) state repeats first.
/// Requires D non-square and Q0 | (P0^2 - D).
inline std::optional<std::pair<Integer, Integer>> pqa_first_unit_q(const Integer &P0, const Integer &Q0,
                                                                   const Integer &D)
{
    const Integer s = isqrt(D);
    Integer P = P0, Q = Q0;
    Integer A2 = 0, A1 = 1; // A_{i-2}, A_{i-1}
    Integer B2 = 1, B1 = 0;
    Integer G2 = -P0, G1 = Q0;
    std::set<std::pair<Integer, Integer>> seen;
    for (unsigned long i = 0;; ++i) {
        if (i >= 1) {
            if (Q == 1 || Q == -1) {
                return std::make_pair(G1, B1);
            }
            if (!seen.emplace(P, Q).second) {
                return std::nullopt;
            }
        }
        Integer a;
        if (sign(Q) > 0) {
            a = floor_div(P + s, Q);
        } else {
            a = -(floor_div(P + s, -Q) + 1);
        }
        const Integer A0 = a * A1 + A2;
        const Integer B0 = a * B1 + B2;
        const Integer G0 = a * G1 + G2;
        A2 = A1;
        A1 = A0;
        B2 = B1;
        B1 = B0;
        G2 = G1;
        G1 = G0;
        const Integer Pn = a * Q - P;
        const Integer Qn = (D - Pn * Pn) / Q;
        P = Pn;
        Q = Qn;
    }
}

/// Continued fraction of sqrt(D): (A_{l-1}, B_{l-1}) and the period length l.
inline std::pair<PellSolution, unsigned long> period_convergent(const Integer &D)
{
    const Integer s = isqrt(D);
    Integer P = 0, Q = 1;
    Integer A2 = 0, A1 = 1;
    Integer B2 = 1, B1 = 0;
    for (unsigned long i = 0;; ++i) {
        if (i >= 1 && Q == 1) {
            return {{A1, B1}, i};
        }
        const Integer a = floor_div(P + s, Q);
        const Integer A0 = a * A1 + A2;
        const Integer B0 = a * B1 + B2;
        A2 = A1;
        A1 = A0;
        B2 = B1;
        B1 = B0;
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
}

inline void require_nonsquare(const Integer &D)
{
    if (D < 2 || is_perfect_square(D)) {
        throw InvalidArgument("expected a non-square D >= 2, got " + to_string(D));
    }
}

} // namespace detail

/// Minimal positive solution of x^2 - D y^2 = 1.
inline PellSolution solve_unit(const Integer &D)
{
    detail::require_nonsquare(D);
    auto [c, l] = detail::period_convergent(D);
    if (l % 2 == 0) {
        return c;
    }
    return {c.x * c.x + D * c.y * c.y, 2 * c.x * c.y};
}

/// Minimal positive solution of x^2 - D y^2 = -1, if any.
inline std::optional<PellSolution> solve_negative_unit(const Integer &D)
{
    detail::require_nonsquare(D);
    auto [c, l] = detail::period_convergent(D);
    if (l % 2 == 1) {
        return c;
    }
    return std::nullopt;
}

/// Nagell's bound on y for a fundamental solution (x, y >= 0) of each class of
/// x^2 - D y^2 = N, with (x1, y1) the fundamental unit:
///   N > 0:  y^2 <= y1^2 N / (2 (x1 + 1))
///   N < 0:  y^2 <= y1^2 |N| / (2 (x1 - 1))
/// Returned as the floor of the square root. Requires D non-square and N != 0.
inline Integer nagell_bound(const PellProblem &p)
{
    detail::require_nonsquare(p.D);
    if (sign(p.N) == 0) {
        throw InvalidArgument("Nagell bound needs N != 0");
    }
    const PellSolution u = solve_unit(p.D);
    const Integer den = sign(p.N) > 0 ? Integer(2 * (u.x + 1)) : Integer(2 * (u.x - 1));
    return isqrt(u.y * u.y * abs(p.N) / den);
}

namespace detail
{

inline PellSolution compose(const PellSolution &a, const PellSolution &b, const Integer &D)
{
    return {a.x * b.x + D * a.y * b.y, a.x * b.y + a.y * b.x};
}

/// Moves within the class of s (multiplying by unit^{+-1}) to minimise |y|; returns |x|, |y|.
inline PellSolution reduce_in_class(PellSolution s, const PellSolution &unit, const Integer &D)
{
    const PellSolution inverse{unit.x, -unit.y};
    for (;;) {
        const PellSolution up = compose(s, unit, D);
        const PellSolution down = compose(s, inverse, D);
        const Integer ay = abs(s.y);
        if (abs(down.y) < ay) {
            s = down;
        } else if (abs(up.y) < ay) {
            s = up;
        } else {
            break;
        }
    }
    return {abs(s.x), abs(s.y)};
}

/// Divisor-pair search for D = k^2: (x - k y)(x + k y) = N, N != 0. Minimal |y| solution.
inline std::optional<PellSolution> solve_square_D(const PellProblem &p)
{
    const Integer k = isqrt(p.D);
    if (sign(k) == 0) {
        if (is_perfect_square(p.N)) {
            return PellSolution{isqrt(p.N), 0};
        }
        return std::nullopt;
    }
    std::optional<PellSolution> best;
    for (const auto &u0 : divisors(p.N)) {
        for (const Integer &u : {u0, Integer(-u0)}) {
            const Integer v = p.N / u;
            const Integer sum = u + v;
            const Integer diff = v - u;
            if (!divides(2, sum) || !divides(2 * k, diff)) {
                continue;
            }
            PellSolution s{abs(Integer(sum / 2)), abs(Integer(diff / (2 * k)))};
            if (!best || s.y < best->y) {
                best = s;
            }
        }
    }
    return best;
}

} // namespace detail

/// One representative per solution class of x^2 - D y^2 = N (D non-square, N != 0),
/// each reduced to minimal |y| and returned with non-negative entries.
inline std::vector<PellSolution> solution_classes(const PellProblem &p)
{
    detail::require_nonsquare(p.D);
    if (sign(p.N) == 0) {
        throw InvalidArgument("solution classes need N != 0");
    }
    const Integer &D = p.D;
    const PellSolution unit = solve_unit(D);
    const std::optional<PellSolution> neg = solve_negative_unit(D);
    std::vector<PellSolution> out;
    for (const auto &f : square_divisors(p.N)) {
        const Integer m = p.N / (f * f);
        const Integer am = abs(m);
        // z ranges over (-|m|/2, |m|/2] with z^2 = D mod |m|.
        const Integer lo = -floor_div(am - 1, 2);
        const Integer hi = floor_div(am, 2);
        for (Integer z = lo; z <= hi; ++z) {
            if (!divides(am, z * z - D)) {
                continue;
            }
            auto rs = detail::pqa_first_unit_q(z, am, D);
            if (!rs) {
                continue;
            }
            const Integer &r = rs->first;
            const Integer &s = rs->second;
            const Integer value = r * r - D * s * s;
            std::optional<PellSolution> sol;
            if (value == m) {
                sol = PellSolution{f * r, f * s};
            } else if (value == -m && neg) {
                sol = PellSolution{f * (r * neg->x + s * neg->y * D), f * (r * neg->y + s * neg->x)};
            }
            if (sol) {
                out.push_back(detail::reduce_in_class(*sol, unit, D));
            }
        }
    }
    return out;
}

/// Definitive decision of solvability with a certificate.
///
/// N = 0 asks for a nontrivial solution, which exists iff D is a perfect square.
/// A returned witness has minimal y >= 0 among all solutions, and x >= 0.
inline PellOutcome decide(const PellProblem &p, const std::vector<Integer> &moduli = default_moduli())
{
    PellOutcome out;
    out.problem = p;
    out.searched = p;
    if (sign(p.N) == 0) {
        if (is_perfect_square(p.D) && sign(p.D) > 0) {
            out.solvable = true;
            out.witness = PellSolution{isqrt(p.D), 1};
            out.certificate = CertificateKind::WitnessFound;
        } else if (sign(p.D) == 0) {
            // x^2 = 0 with y free: (0, 1) is nontrivial.
            out.solvable = true;
            out.witness = PellSolution{0, 1};
            out.certificate = CertificateKind::WitnessFound;
        } else {
            out.certificate = CertificateKind::SquareTestFailed;
        }
        return out;
    }
    if (is_perfect_square(p.D)) {
        if (auto s = detail::solve_square_D(p)) {
            out.solvable = true;
            out.witness = s;
            out.certificate = CertificateKind::WitnessFound;
        } else {
            out.certificate = CertificateKind::FundamentalSearchExhausted;
        }
        return out;
    }
    if (auto cert = sieve(p, moduli)) {
        out.certificate = CertificateKind::ModulusSieve;
        out.modulus = cert->modulus;
        out.searched = cert->reduced;
        out.halvings = cert->halvings;
        return out;
    }
    auto [q, h] = even_reduction(p);
    out.searched = q;
    out.halvings = h;
    if (is_perfect_square(q.D)) {
        // Cannot happen: D/4^h is a square only if D is.
        throw InvalidArgument("internal: reduction produced a square coefficient");
    }
    out.unit = solve_unit(q.D);
    out.y_bound = nagell_bound(q);
    const auto classes = solution_classes(q);
    if (classes.empty()) {
        out.certificate = CertificateKind::FundamentalSearchExhausted;
        return out;
    }
    PellSolution best = classes.front();
    for (const auto &c : classes) {
        if (c.y < best.y || (c.y == best.y && c.x < best.x)) {
            best = c;
        }
    }
    Integer scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), h);
    out.solvable = true;
    out.witness = PellSolution{best.x * scale, best.y};
    out.certificate = CertificateKind::WitnessFound;
    return out;
}

inline PellOutcome decide(const Integer &D, const Integer &N)
{
    return decide(PellProblem(D, N));
}

} // namespace mds::pell

#endif
