#pragma once

// Coefficient sources and the fundamental recurrences
//
//   A(-1) = 1, A(0) = b0, B(-1) = 0, B(0) = 1,
//   A(n) = b(n)·A(n-1) + a(n)·A(n-2),   B(n) = b(n)·B(n-1) + a(n)·B(n-2),
//
// with a indexed from 1 and b indexed from 0. All arithmetic is carried out in
// a single tower T; tables are materialized vectors.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cfrac/error.hpp"
#include "cfrac/scalar.hpp"

namespace cfrac {

/// Purely periodic coefficient block: a(n+p) = a(n) for n >= 1, b(n+p) = b(n) for n >= 0.
template <Field T>
class PeriodicCF {
public:
    /// `a` holds a1..ap, `b` holds b0..b(p-1); every entry must be nonzero.
    PeriodicCF(std::vector<T> a, std::vector<T> b);

    long period() const noexcept { return static_cast<long>(a_.size()); }
    const std::vector<T>& a_block() const noexcept { return a_; }
    const std::vector<T>& b_block() const noexcept { return b_; }

    const T& a(long n) const { return a_[static_cast<std::size_t>((n - 1) % period())]; }
    const T& b(long n) const { return b_[static_cast<std::size_t>(n % period())]; }

    friend bool operator==(const PeriodicCF&, const PeriodicCF&) = default;

private:
    std::vector<T> a_;
    std::vector<T> b_;
};

template <Field T>
struct FiniteCoefficients {
    std::vector<T> a; // a1..aN
    std::vector<T> b; // b0..bN
};

template <Field T>
struct GeneratedCoefficients {
    std::string name;
    std::map<std::string, std::vector<Rational>> params;
    std::function<T(long)> a;
    std::function<T(long)> b;
    /// Set when the generator is purely periodic.
    std::optional<PeriodicCF<T>> periodic_form;
};

/// Where a continued fraction's coefficients come from.
template <Field T>
class CFSpec {
public:
    enum class Kind { Finite, Periodic, Generator };

    static CFSpec finite(std::vector<T> a, std::vector<T> b);
    static CFSpec periodic(PeriodicCF<T> pcf);
    static CFSpec generator(GeneratedCoefficients<T> gen);

    Kind kind() const noexcept { return static_cast<Kind>(source_.index()); }

    /// a(n) for n >= 1. Throws CoefficientUnavailable past the end of a finite spec.
    T a(long n) const;
    /// b(n) for n >= 0.
    T b(long n) const;

    /// Largest available index for finite specs.
    std::optional<long> last_index() const;
    /// The periodic block, for Periodic specs and periodic generators.
    std::optional<PeriodicCF<T>> as_periodic() const;

    const std::variant<FiniteCoefficients<T>, PeriodicCF<T>, GeneratedCoefficients<T>>& source() const noexcept
    {
        return source_;
    }

private:
    explicit CFSpec(std::variant<FiniteCoefficients<T>, PeriodicCF<T>, GeneratedCoefficients<T>> s)
        : source_(std::move(s))
    {
    }

    std::variant<FiniteCoefficients<T>, PeriodicCF<T>, GeneratedCoefficients<T>> source_;
};

template <Field T>
struct ConvergentPair {
    long n;
    T A;
    T B;
};

/// Numerator/denominator of the tail b(k) + a(k+1)/b(k+1) + ... + a(k+n)/b(k+n).
template <Field T>
struct ShiftedPair {
    long k;
    long n;
    T A;
    T B;
};

/// Pairs for indices -1..n_max (n_max + 2 entries).
template <Field T>
std::vector<ConvergentPair<T>> convergent_table(const CFSpec<T>& spec, long n_max);

/// A(n)/B(n); throws ZeroDenominator (index n) when B(n) = 0.
template <Field T>
T evaluate_convergent(const CFSpec<T>& spec, long n);

/// A(n)B(n-1) - A(n-1)B(n), n >= 1.
template <Field T>
T cross_determinant(const CFSpec<T>& spec, long n);

/// (-1)^(n-1)·a1·a2···an, the closed form of the cross determinant.
template <Field T>
T signed_a_product(const CFSpec<T>& spec, long n);

/// Pairs (A(k,n), B(k,n)) for n = -1..n_max.
template <Field T>
std::vector<ShiftedPair<T>> shifted_table(const CFSpec<T>& spec, long k, long n_max);

/// A(n)/B(n) - A(n-1)/B(n-1), n >= 1; ZeroDenominator carries the index of the vanishing B.
template <Field T>
T successive_difference(const CFSpec<T>& spec, long n);

/// Named generators over the rationals: "regular" (a = 1, params b cycles),
/// "negative" (a = -1, params b cycles), "sqrt2" (b = 1, 2, 2, ...; a = 1), "golden".
CFSpec<Rational> make_generator(const std::string& name, const std::map<std::string, std::vector<Rational>>& params);

/// Names accepted by make_generator.
const std::vector<std::string>& generator_names();

extern template class PeriodicCF<Rational>;
extern template class PeriodicCF<QuadExt>;
extern template class PeriodicCF<ComplexFloat>;
extern template class CFSpec<Rational>;
extern template class CFSpec<QuadExt>;
extern template class CFSpec<ComplexFloat>;

} // namespace cfrac
