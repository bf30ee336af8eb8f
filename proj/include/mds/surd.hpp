#ifndef MDS_SURD_HPP
#define MDS_SURD_HPP

#include <ostream>
#include <string>

#include "mds/error.hpp"
#include "mds/integer.hpp"

namespace mds
{

/// Exact value a + b*sqrt(radicand) with rational a, b.
///
/// When the radicand is a perfect square the value is folded into a and b is zero;
/// the radicand itself is kept as given so reports can quote it.
class QuadraticSurd
{
public:
    QuadraticSurd() : radicand_(0) {}

    QuadraticSurd(const Rational &a) : a_(a), radicand_(0) {} // NOLINT: implicit from rationals

    QuadraticSurd(const Rational &a, const Rational &b, const Integer &radicand)
        : a_(a), b_(b), radicand_(radicand)
    {
        if (mds::sign(radicand_) < 0) {
            throw InvalidArgument("negative radicand");
        }
        normalize();
    }

    const Rational &rational_part() const noexcept
    {
        return a_;
    }
    const Rational &irrational_part() const noexcept
    {
        return b_;
    }
    const Integer &radicand() const noexcept
    {
        return radicand_;
    }

    bool is_rational() const
    {
        return mds::sign(b_) == 0;
    }

    int sign() const
    {
        const int sa = mds::sign(a_);
        const int sb = mds::sign(b_);
        if (sb == 0) {
            return sa;
        }
        if (sa == 0 || sa == sb) {
            return sb;
        }
        // a and b*sqrt(r) have opposite signs: compare a^2 with b^2 r.
        const Rational lhs = a_ * a_;
        const Rational rhs = b_ * b_ * Rational(radicand_);
        if (lhs == rhs) {
            return 0;
        }
        return lhs > rhs ? sa : sb;
    }

    QuadraticSurd conjugate() const
    {
        return QuadraticSurd(a_, -b_, radicand_);
    }

    friend QuadraticSurd operator-(const QuadraticSurd &x)
    {
        return QuadraticSurd(-x.a_, -x.b_, x.radicand_);
    }

    friend QuadraticSurd operator+(const QuadraticSurd &x, const QuadraticSurd &y)
    {
        const Integer r = common_radicand(x, y);
        return QuadraticSurd(x.a_ + y.a_, x.b_ + y.b_, r);
    }

    friend QuadraticSurd operator-(const QuadraticSurd &x, const QuadraticSurd &y)
    {
        return x + (-y);
    }

    friend QuadraticSurd operator*(const QuadraticSurd &x, const QuadraticSurd &y)
    {
        const Integer r = common_radicand(x, y);
        return QuadraticSurd(x.a_ * y.a_ + x.b_ * y.b_ * Rational(r), x.a_ * y.b_ + x.b_ * y.a_, r);
    }

    QuadraticSurd &operator+=(const QuadraticSurd &y)
    {
        return *this = *this + y;
    }
    QuadraticSurd &operator*=(const QuadraticSurd &y)
    {
        return *this = *this * y;
    }

    friend bool operator==(const QuadraticSurd &x, const QuadraticSurd &y)
    {
        if (x.a_ != y.a_) {
            return false;
        }
        if (mds::sign(x.b_) != mds::sign(y.b_)) {
            return false;
        }
        // b1 sqrt(r1) == b2 sqrt(r2) with equal signs iff b1^2 r1 == b2^2 r2.
        return x.b_ * x.b_ * Rational(x.radicand_) == y.b_ * y.b_ * Rational(y.radicand_);
    }

    std::string to_string() const
    {
        if (is_rational()) {
            return a_.get_str();
        }
        std::string out;
        if (mds::sign(a_) != 0) {
            out = a_.get_str() + (mds::sign(b_) > 0 ? " + " : " - ");
        } else if (mds::sign(b_) < 0) {
            out = "-";
        }
        Rational mag = b_;
        if (mds::sign(mag) < 0) {
            mag = -mag;
        }
        if (mag != 1) {
            out += mag.get_str() + "*";
        }
        out += "sqrt(" + radicand_.get_str() + ")";
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const QuadraticSurd &x)
    {
        return os << x.to_string();
    }

private:
    static Integer common_radicand(const QuadraticSurd &x, const QuadraticSurd &y)
    {
        if (x.is_rational()) {
            return y.is_rational() ? (x.radicand_ != 0 ? x.radicand_ : y.radicand_) : y.radicand_;
        }
        if (y.is_rational() || x.radicand_ == y.radicand_) {
            return x.radicand_;
        }
        throw InvalidArgument("surd arithmetic over different radicands " + x.radicand_.get_str() + " and "
                              + y.radicand_.get_str());
    }

    void normalize()
    {
        a_.canonicalize();
        b_.canonicalize();
        if (mds::sign(b_) != 0 && is_perfect_square(radicand_)) {
            a_ += b_ * Rational(isqrt(radicand_));
            b_ = 0;
        }
    }

    Rational a_;
    Rational b_;
    Integer radicand_;
};

/// sqrt(r) as a surd.
inline QuadraticSurd sqrt_surd(const Integer &r)
{
    return QuadraticSurd(0, 1, r);
}

} // namespace mds

#endif
