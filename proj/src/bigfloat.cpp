#include "cfrac/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "cfrac/error.hpp"

namespace cfrac {

namespace {

mpfr_prec_t checked_precision(long bits)
{
    if (bits < MPFR_PREC_MIN || bits > 1L << 24)
        throw Error(ErrorKind::InvalidArgument, "precision out of range: " + std::to_string(bits));
    return static_cast<mpfr_prec_t>(bits);
}

} // namespace

BigFloat::BigFloat(long precision_bits)
{
    mpfr_init2(v_, checked_precision(precision_bits));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, long precision_bits)
{
    mpfr_init2(v_, checked_precision(precision_bits));
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, long precision_bits)
{
    mpfr_init2(v_, checked_precision(precision_bits));
    mpfr_set_q(v_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other)
{
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept
{
    // Leave `other` as a valid minimal-precision zero.
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other)
{
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept
{
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pow2(long exponent, long precision_bits)
{
    BigFloat r(precision_bits);
    mpfr_set_si_2exp(r.v_, 1, exponent, MPFR_RNDN);
    return r;
}

void BigFloat::widen_to(long precision_bits)
{
    if (precision_bits > precision()) mpfr_prec_round(v_, static_cast<mpfr_prec_t>(precision_bits), MPFR_RNDN);
}

BigFloat BigFloat::with_precision(long precision_bits) const
{
    BigFloat r(precision_bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const
{
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const
{
    BigFloat r(precision());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::str(int digits) const
{
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, "%.*Rg", digits, v_) < 0) return "?";
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

std::string BigFloat::str() const
{
    const int digits = std::max(1, static_cast<int>(std::floor(static_cast<double>(precision()) * 0.30102999566398120)));
    return str(digits);
}

BigFloat& BigFloat::operator+=(const BigFloat& o)
{
    widen_to(o.precision());
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o)
{
    widen_to(o.precision());
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o)
{
    widen_to(o.precision());
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o)
{
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    widen_to(o.precision());
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat operator-(const BigFloat& x)
{
    BigFloat r(x.precision());
    mpfr_neg(r.v_, x.v_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const BigFloat& l, const BigFloat& r)
{
    if (mpfr_unordered_p(l.v_, r.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(l.v_, r.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigFloat hypot(const BigFloat& x, const BigFloat& y)
{
    BigFloat r(std::max(x.precision(), y.precision()));
    mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

} // namespace cfrac
