#pragma once

#include <compare>
#include <string>

#include <mpfr.h>

#include "cfrac/rational.hpp"

namespace cfrac {

inline constexpr long kDefaultPrecisionBits = 128;
inline constexpr long kMinPrecisionBits = 64;

/// Owning MPFR real with an explicit precision in bits. Binary operations
/// round to nearest at the larger of the two operand precisions.
class BigFloat {
public:
    explicit BigFloat(long precision_bits = kDefaultPrecisionBits);
    BigFloat(long value, long precision_bits);
    BigFloat(const Rational& value, long precision_bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    /// 2^exponent at the given precision.
    static BigFloat pow2(long exponent, long precision_bits);

    long precision() const noexcept { return static_cast<long>(mpfr_get_prec(v_)); }
    mpfr_srcptr get() const noexcept { return v_; }
    mpfr_ptr get() noexcept { return v_; }

    int sign() const noexcept { return mpfr_sgn(v_); }
    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
    double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Copy re-rounded to `precision_bits`.
    BigFloat with_precision(long precision_bits) const;
    BigFloat abs() const;
    BigFloat sqrt() const;

    /// Scientific decimal with `digits` significant digits.
    std::string str(int digits) const;
    /// Significant digits implied by the precision.
    std::string str() const;

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);

    friend BigFloat operator+(BigFloat l, const BigFloat& r) { return l += r; }
    friend BigFloat operator-(BigFloat l, const BigFloat& r) { return l -= r; }
    friend BigFloat operator*(BigFloat l, const BigFloat& r) { return l *= r; }
    friend BigFloat operator/(BigFloat l, const BigFloat& r) { return l /= r; }
    friend BigFloat operator-(const BigFloat& x);

    friend bool operator==(const BigFloat& l, const BigFloat& r) { return mpfr_equal_p(l.v_, r.v_) != 0; }
    friend std::partial_ordering operator<=>(const BigFloat& l, const BigFloat& r);

private:
    void widen_to(long precision_bits);

    mpfr_t v_;
};

/// Hypotenuse sqrt(x^2 + y^2) without intermediate overflow.
BigFloat hypot(const BigFloat& x, const BigFloat& y);

} // namespace cfrac
