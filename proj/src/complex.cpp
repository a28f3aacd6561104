#include "cfrac/complex.hpp"

#include <algorithm>
#include <ostream>

#include "cfrac/error.hpp"

namespace cfrac {

namespace {

long checked(long bits)
{
    if (bits < kMinPrecisionBits)
        throw Error(ErrorKind::InvalidArgument,
                    "complex precision must be at least " + std::to_string(kMinPrecisionBits) + " bits");
    return bits;
}

} // namespace

ComplexFloat::ComplexFloat(long precision_bits) : re_(checked(precision_bits)), im_(precision_bits) {}

ComplexFloat::ComplexFloat(long re, long precision_bits) : re_(re, checked(precision_bits)), im_(precision_bits) {}

ComplexFloat::ComplexFloat(const Rational& re, long precision_bits)
    : re_(re, checked(precision_bits)), im_(precision_bits)
{
}

ComplexFloat::ComplexFloat(const Rational& re, const Rational& im, long precision_bits)
    : re_(re, checked(precision_bits)), im_(im, precision_bits)
{
}

ComplexFloat::ComplexFloat(const QuadExt& x, long precision_bits)
    : re_(x.rational_part(), checked(precision_bits)), im_(precision_bits)
{
    if (x.is_rational()) return;
    const BigFloat root = BigFloat(Rational(Integer(::abs(x.radicand()))), precision_bits).sqrt();
    const BigFloat scaled = BigFloat(x.surd_part(), precision_bits) * root;
    if (x.radicand() > 0)
        re_ += scaled;
    else
        im_ = scaled;
}

ComplexFloat::ComplexFloat(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im))
{
    checked(std::min(re_.precision(), im_.precision()));
}

ComplexFloat ComplexFloat::sqrt() const
{
    const long prec = precision();
    if (is_zero()) return ComplexFloat(prec);
    // sqrt(z) = sqrt((|z| + x)/2) + i·sign(y)·sqrt((|z| − x)/2)
    const BigFloat modulus = abs();
    const BigFloat two(2, prec);
    BigFloat r = ((modulus + re_) / two).sqrt();
    BigFloat i = ((modulus - re_) / two).sqrt();
    if (im_.sign() < 0) i = -i;
    return ComplexFloat(std::move(r), std::move(i));
}

std::string ComplexFloat::str(int digits) const
{
    if (im_.is_zero()) return re_.str(digits);
    std::string im = im_.abs().str(digits);
    return re_.str(digits) + (im_.sign() < 0 ? " - " : " + ") + im + "i";
}

std::string ComplexFloat::str() const
{
    if (im_.is_zero()) return re_.str();
    return re_.str() + (im_.sign() < 0 ? " - " : " + ") + im_.abs().str() + "i";
}

ComplexFloat& ComplexFloat::operator+=(const ComplexFloat& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ComplexFloat& ComplexFloat::operator-=(const ComplexFloat& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ComplexFloat& ComplexFloat::operator*=(const ComplexFloat& o)
{
    BigFloat re = re_ * o.re_ - im_ * o.im_;
    BigFloat im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

ComplexFloat& ComplexFloat::operator/=(const ComplexFloat& o)
{
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    const BigFloat den = o.re_ * o.re_ + o.im_ * o.im_;
    BigFloat re = (re_ * o.re_ + im_ * o.im_) / den;
    BigFloat im = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const ComplexFloat& x) { return os << x.str(); }

} // namespace cfrac
