#pragma once

#include <iosfwd>
#include <string>

#include "cfrac/bigfloat.hpp"
#include "cfrac/quadratic.hpp"

namespace cfrac {

/// Complex number over BigFloat components at an explicit precision (>= 64 bits).
class ComplexFloat {
public:
    explicit ComplexFloat(long precision_bits = kDefaultPrecisionBits);
    ComplexFloat(long re, long precision_bits);
    ComplexFloat(const Rational& re, long precision_bits);
    ComplexFloat(const Rational& re, const Rational& im, long precision_bits);
    /// Evaluates √D at the given precision.
    ComplexFloat(const QuadExt& x, long precision_bits);
    ComplexFloat(BigFloat re, BigFloat im);

    long precision() const noexcept { return re_.precision(); }
    const BigFloat& real() const noexcept { return re_; }
    const BigFloat& imag() const noexcept { return im_; }

    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    BigFloat abs() const { return hypot(re_, im_); }
    ComplexFloat conjugate() const { return ComplexFloat(re_, -im_); }
    /// Principal square root.
    ComplexFloat sqrt() const;

    /// "re" when the imaginary part is zero, else "re + im i".
    std::string str(int digits) const;
    std::string str() const;

    ComplexFloat& operator+=(const ComplexFloat& o);
    ComplexFloat& operator-=(const ComplexFloat& o);
    ComplexFloat& operator*=(const ComplexFloat& o);
    ComplexFloat& operator/=(const ComplexFloat& o);

    friend ComplexFloat operator+(ComplexFloat l, const ComplexFloat& r) { return l += r; }
    friend ComplexFloat operator-(ComplexFloat l, const ComplexFloat& r) { return l -= r; }
    friend ComplexFloat operator*(ComplexFloat l, const ComplexFloat& r) { return l *= r; }
    friend ComplexFloat operator/(ComplexFloat l, const ComplexFloat& r) { return l /= r; }
    friend ComplexFloat operator-(const ComplexFloat& x) { return ComplexFloat(-x.re_, -x.im_); }

    /// Bitwise value equality; tolerance-based tests live with their callers.
    friend bool operator==(const ComplexFloat& l, const ComplexFloat& r)
    {
        return l.re_ == r.re_ && l.im_ == r.im_;
    }

    friend std::ostream& operator<<(std::ostream& os, const ComplexFloat& x);

private:
    BigFloat re_;
    BigFloat im_;
};

} // namespace cfrac
