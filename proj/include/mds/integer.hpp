#ifndef MDS_INTEGER_HPP
#define MDS_INTEGER_HPP

// Arbitrary-precision integer and rational helpers on top of GMP.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mds/error.hpp"

namespace mds
{

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer abs(const Integer &a)
{
    Integer r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline int sign(const Integer &a)
{
    return mpz_sgn(a.get_mpz_t());
}

inline int sign(const Rational &a)
{
    return mpq_sgn(a.get_mpq_t());
}

/// Floor of the square root; requires n >= 0.
inline Integer isqrt(const Integer &n)
{
    if (sign(n) < 0) {
        throw InvalidArgument("isqrt of a negative integer");
    }
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Integer &n)
{
    return sign(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// Floor division (rounds toward negative infinity).
inline Integer floor_div(const Integer &a, const Integer &b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Non-negative residue of a modulo m (m > 0).
inline Integer mod(const Integer &a, const Integer &m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool divides(const Integer &d, const Integer &n)
{
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer gcd(const Integer &a, const Integer &b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// n(n-1)/2, which is zero for n in {0, 1}.
inline Integer choose2(const Integer &n)
{
    return n * (n - 1) / 2;
}

/// Exponent of the prime p in n != 0.
inline unsigned long valuation(const Integer &n, const Integer &p)
{
    if (sign(n) == 0) {
        throw InvalidArgument("valuation of zero");
    }
    Integer rest = abs(n);
    unsigned long v = 0;
    while (divides(p, rest)) {
        rest /= p;
        ++v;
    }
    return v;
}

/// Prime factorisation of |n| by trial division, as (prime, exponent) pairs in increasing order.
inline std::vector<std::pair<Integer, unsigned long>> factorize(const Integer &n)
{
    if (sign(n) == 0) {
        throw InvalidArgument("factorisation of zero");
    }
    std::vector<std::pair<Integer, unsigned long>> out;
    Integer rest = abs(n);
    for (Integer p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (divides(p, rest)) {
            unsigned long e = 0;
            while (divides(p, rest)) {
                rest /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (rest > 1) {
        out.emplace_back(rest, 1);
    }
    return out;
}

/// All positive f with f^2 dividing n (n != 0), in increasing order.
inline std::vector<Integer> square_divisors(const Integer &n)
{
    std::vector<Integer> out{1};
    for (const auto &[p, e] : factorize(n)) {
        const std::size_t current = out.size();
        Integer pk = 1;
        for (unsigned long k = 1; k <= e / 2; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < current; ++i) {
                out.push_back(out[i] * pk);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All positive divisors of n (n != 0), in increasing order.
inline std::vector<Integer> divisors(const Integer &n)
{
    std::vector<Integer> out{1};
    for (const auto &[p, e] : factorize(n)) {
        const std::size_t current = out.size();
        Integer pk = 1;
        for (unsigned long k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < current; ++i) {
                out.push_back(out[i] * pk);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string to_string(const Integer &n)
{
    return n.get_str();
}

template <class U>
std::string to_string(const __gmp_expr<mpz_t, U> &e)
{
    return Integer(e).get_str();
}

inline std::string to_string(const Rational &q)
{
    return q.get_str();
}

/// Parses a decimal integer with optional sign; throws InvalidArgument on anything else.
inline Integer parse_integer(std::string_view text)
{
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) {
        throw InvalidArgument("expected an integer, got '" + s + "'");
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            throw InvalidArgument("expected an integer, got '" + s + "'");
        }
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    return Integer(s, 10);
}

inline Rational make_rational(const Integer &num, const Integer &den = 1)
{
    if (sign(den) == 0) {
        throw InvalidArgument("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace mds

#endif
