#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cfrac {

using Integer = mpz_class;

/// Exact rational in canonical form: positive denominator, gcd(|num|, den) = 1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {} // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : q_(v) {} // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Accepts "p", "p/q", and decimal/scientific forms ("0.25", "1e-6"); exact.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const noexcept { return q_; }
    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    int sign() const noexcept { return sgn(q_); }
    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_integer() const noexcept { return q_.get_den() == 1; }
    double to_double() const { return q_.get_d(); }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational inverse() const;

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational l, const Rational& r) { return l += r; }
    friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
    friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
    friend Rational operator/(Rational l, const Rational& r) { return l /= r; }
    friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.q_)); }

    friend bool operator==(const Rational& l, const Rational& r) { return cmp(l.q_, r.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& l, const Rational& r)
    {
        const int c = cmp(l.q_, r.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x);

private:
    mpq_class q_;
};

/// Floor of log2|x| for nonzero x, in the sense of bit lengths; used for size diagnostics.
std::size_t bit_size(const Rational& x);

} // namespace cfrac
