#include "cfrac/scalar.hpp"

#include <algorithm>

#include "cfrac/error.hpp"

namespace cfrac {

std::string_view to_string(Tower tower) noexcept
{
    switch (tower) {
    case Tower::Rational: return "rational";
    case Tower::QuadExt: return "quadext";
    case Tower::Complex: return "complex";
    }
    return "?";
}

namespace {

long precision_of(const Scalar& x)
{
    return x.tower() == Tower::Complex ? x.as<ComplexFloat>().precision() : kDefaultPrecisionBits;
}

template <class Op>
Scalar combine(const Scalar& l, const Scalar& r, Op op)
{
    const Tower t = std::max(l.tower(), r.tower());
    const long bits = std::max(precision_of(l), precision_of(r));
    const Scalar pl = l.promote(t, bits);
    const Scalar pr = r.promote(t, bits);
    switch (t) {
    case Tower::Rational: return Scalar(op(pl.as<Rational>(), pr.as<Rational>()));
    case Tower::QuadExt: return Scalar(op(pl.as<QuadExt>(), pr.as<QuadExt>()));
    case Tower::Complex: return Scalar(op(pl.as<ComplexFloat>(), pr.as<ComplexFloat>()));
    }
    throw Error(ErrorKind::TowerMismatch, "unknown tower");
}

} // namespace

Scalar Scalar::promote(Tower target, long precision_bits) const
{
    if (target < tower())
        throw Error(ErrorKind::TowerMismatch,
                    "cannot demote " + std::string(to_string(tower())) + " to " + std::string(to_string(target)));
    return std::visit(
        [&](const auto& x) -> Scalar {
            using T = std::decay_t<decltype(x)>;
            switch (target) {
            case Tower::Rational: return x;
            case Tower::QuadExt:
                if constexpr (std::is_same_v<T, Rational>) return QuadExt(x);
                else return x;
            case Tower::Complex:
                if constexpr (std::is_same_v<T, ComplexFloat>) {
                    if (x.precision() >= precision_bits) return x;
                    return ComplexFloat(x.real().with_precision(precision_bits),
                                        x.imag().with_precision(precision_bits));
                } else {
                    return to_complex(x, precision_bits);
                }
            }
            return x;
        },
        v_);
}

bool Scalar::is_zero() const
{
    return std::visit([](const auto& x) { return cfrac::is_zero(x); }, v_);
}

std::string Scalar::str() const
{
    return std::visit([](const auto& x) { return to_text(x); }, v_);
}

Scalar operator+(const Scalar& l, const Scalar& r)
{
    return combine(l, r, [](const auto& x, const auto& y) { return x + y; });
}

Scalar operator-(const Scalar& l, const Scalar& r)
{
    return combine(l, r, [](const auto& x, const auto& y) { return x - y; });
}

Scalar operator*(const Scalar& l, const Scalar& r)
{
    return combine(l, r, [](const auto& x, const auto& y) { return x * y; });
}

Scalar operator/(const Scalar& l, const Scalar& r)
{
    return combine(l, r, [](const auto& x, const auto& y) { return x / y; });
}

Scalar operator-(const Scalar& x)
{
    return std::visit([](const auto& v) { return Scalar(-v); }, x.v_);
}

bool operator==(const Scalar& l, const Scalar& r)
{
    const Tower t = std::max(l.tower(), r.tower());
    const long bits = std::max(precision_of(l), precision_of(r));
    return l.promote(t, bits).v_ == r.promote(t, bits).v_;
}

std::partial_ordering compare_modulus(const Scalar& x, const Scalar& y)
{
    const Tower t = std::max(x.tower(), y.tower());
    const long bits = std::max(precision_of(x), precision_of(y));
    const Scalar px = x.promote(t, bits);
    const Scalar py = y.promote(t, bits);
    switch (t) {
    case Tower::Rational: return px.as<Rational>().abs() <=> py.as<Rational>().abs();
    case Tower::QuadExt: return compare_modulus(px.as<QuadExt>(), py.as<QuadExt>());
    case Tower::Complex: return px.as<ComplexFloat>().abs() <=> py.as<ComplexFloat>().abs();
    }
    return std::partial_ordering::unordered;
}

} // namespace cfrac
