#pragma once

#include <compare>
#include <concepts>
#include <string>
#include <string_view>
#include <variant>

#include "cfrac/complex.hpp"
#include "cfrac/quadratic.hpp"
#include "cfrac/rational.hpp"

namespace cfrac {

enum class Tower { Rational, QuadExt, Complex };

std::string_view to_string(Tower tower) noexcept;

// Per-tower helpers used by the generic algorithms. `like(proto, v)` builds the
// integer v in the same tower (and precision) as `proto`.

inline bool is_zero(const Rational& x) noexcept { return x.is_zero(); }
inline bool is_zero(const QuadExt& x) noexcept { return x.is_zero(); }
inline bool is_zero(const ComplexFloat& x) noexcept { return x.is_zero(); }

inline Rational like(const Rational&, long v) { return Rational(v); }
inline QuadExt like(const QuadExt&, long v) { return QuadExt(v); }
inline ComplexFloat like(const ComplexFloat& proto, long v) { return ComplexFloat(v, proto.precision()); }

inline ComplexFloat to_complex(const Rational& x, long bits) { return ComplexFloat(x, bits); }
inline ComplexFloat to_complex(const QuadExt& x, long bits) { return ComplexFloat(x, bits); }
inline ComplexFloat to_complex(const ComplexFloat& x, long) { return x; }

inline std::string to_text(const Rational& x) { return x.str(); }
inline std::string to_text(const QuadExt& x) { return x.str(); }
inline std::string to_text(const ComplexFloat& x) { return x.str(); }

template <class T>
concept Field = std::copyable<T> && std::equality_comparable<T> && requires(const T& x, const T& y) {
    { x + y } -> std::convertible_to<T>;
    { x - y } -> std::convertible_to<T>;
    { x * y } -> std::convertible_to<T>;
    { x / y } -> std::convertible_to<T>;
    { -x } -> std::convertible_to<T>;
    { is_zero(x) } -> std::same_as<bool>;
    { like(x, 1L) } -> std::convertible_to<T>;
};

template <class T>
concept ExactField = Field<T> && (std::same_as<T, Rational> || std::same_as<T, QuadExt>);

/// A number in one of the three towers. Binary operations promote along
/// Rational -> QuadExt -> Complex; complex results use the larger precision.
class Scalar {
public:
    using Value = std::variant<Rational, QuadExt, ComplexFloat>;

    Scalar() : v_(Rational(0)) {}
    Scalar(Rational x) : v_(std::move(x)) {} // NOLINT(google-explicit-constructor)
    Scalar(QuadExt x) : v_(std::move(x)) {} // NOLINT(google-explicit-constructor)
    Scalar(ComplexFloat x) : v_(std::move(x)) {} // NOLINT(google-explicit-constructor)
    Scalar(long x) : v_(Rational(x)) {} // NOLINT(google-explicit-constructor)

    Tower tower() const noexcept { return static_cast<Tower>(v_.index()); }
    const Value& value() const noexcept { return v_; }

    template <class T>
    const T& as() const { return std::get<T>(v_); }

    /// Embeds into `target`, which must not be below the current tower.
    Scalar promote(Tower target, long precision_bits = kDefaultPrecisionBits) const;

    bool is_zero() const;
    std::string str() const;

    friend Scalar operator+(const Scalar& l, const Scalar& r);
    friend Scalar operator-(const Scalar& l, const Scalar& r);
    friend Scalar operator*(const Scalar& l, const Scalar& r);
    friend Scalar operator/(const Scalar& l, const Scalar& r);
    friend Scalar operator-(const Scalar& x);

    /// Exact for Rational/QuadExt (after promotion); bitwise for Complex.
    friend bool operator==(const Scalar& l, const Scalar& r);

private:
    Value v_;
};

/// Compares |x| with |y|; exact in the exact towers.
std::partial_ordering compare_modulus(const Scalar& x, const Scalar& y);

} // namespace cfrac
