#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "cfrac/rational.hpp"

namespace cfrac {

/// Element a + b·√D of the quadratic field Q(√D).
///
/// D is kept as a squarefree integer (square factors are folded into b), so
/// √D is irrational whenever b ≠ 0. A value with b = 0 is a plain rational and
/// combines with any radicand; two values with b ≠ 0 must share D, otherwise
/// the operation throws TowerMismatch. D < 0 is allowed: those values are
/// complex and have no sign, but field arithmetic and moduli stay exact.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(const Rational& a) : a_(a) {} // NOLINT(google-explicit-constructor)
    QuadExt(long a) : a_(a) {} // NOLINT(google-explicit-constructor)
    /// a + b·√radicand; the radicand may be any rational.
    QuadExt(const Rational& a, const Rational& b, const Rational& radicand);

    /// √x, collapsing to a rational when x is a perfect square.
    static QuadExt sqrt(const Rational& x);

    const Rational& rational_part() const noexcept { return a_; }
    const Rational& surd_part() const noexcept { return b_; }
    /// Squarefree radicand, or 0 when this value carries no radical.
    const Integer& radicand() const noexcept { return d_; }

    bool is_rational() const noexcept { return b_.is_zero(); }
    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
    bool is_real() const noexcept { return b_.is_zero() || d_ > 0; }

    QuadExt conjugate() const;
    /// a² − b²D.
    Rational norm() const;
    QuadExt inverse() const;

    /// Exact sign of a real value; throws TowerMismatch for non-real values.
    int sign() const;
    /// |x|² as a real field element (rational when D < 0 or b = 0).
    QuadExt modulus_squared() const;

    double to_double() const;

    /// Canonical surd text "(p + q√D)/r", r > 0, gcd(p, q, r) = 1.
    std::string str() const;

    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt l, const QuadExt& r) { return l += r; }
    friend QuadExt operator-(QuadExt l, const QuadExt& r) { return l -= r; }
    friend QuadExt operator*(QuadExt l, const QuadExt& r) { return l *= r; }
    friend QuadExt operator/(QuadExt l, const QuadExt& r) { return l /= r; }
    friend QuadExt operator-(const QuadExt& x);

    friend bool operator==(const QuadExt& l, const QuadExt& r);

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x);

private:
    const Integer& joint_radicand(const QuadExt& o) const;

    Rational a_;
    Rational b_;
    Integer d_ = 0;
};

/// Exact comparison of |x| and |y|.
std::strong_ordering compare_modulus(const QuadExt& x, const QuadExt& y);

/// Writes n = s²·r with r squarefree (best effort: trial division up to 2^16,
/// then a perfect-square test on the cofactor). Returns r and stores s.
Integer squarefree_part(const Integer& n, Integer& square_root_of_square);

} // namespace cfrac
