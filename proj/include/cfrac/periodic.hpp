#pragma once

// Purely periodic continued fractions. With period p the convergents obey
//
//   (A((n+1)p+q), B((n+1)p+q))ᵀ = M · (A(np+q), B(np+q))ᵀ,
//   M = [[A(p-1), a(p)A(p-2)], [B(p-1), a(p)B(p-2)]],
//
// so convergence is decided by the eigenvalues λ1, λ2 (|λ1| >= |λ2|) of M and
// the fixed points x1, x2 defined by λi = xi·B(p-1) + a(p)B(p-2):
//   B(p-1) = 0                      -> divergent (B vanishes infinitely often)
//   λ1 = λ2                         -> converges to x1
//   |λ1| = |λ2|, λ1 != λ2           -> divergent
//   |λ1| > |λ2|, A(q) = x2·B(q) for
//   some 0 <= q <= p-2              -> divergent, residue class q tends to x2
//   |λ1| > |λ2| otherwise           -> converges to x1
//
// Rational coefficients are classified exactly: eigenvalues live in Q(√Δ),
// Δ = tr² - 4·det. Complex coefficients use MPFR arithmetic with a relative
// tolerance and report PrecisionExhausted when a zero test is undecidable.

#include <optional>
#include <string_view>
#include <vector>

#include "cfrac/cf.hpp"

namespace cfrac {

template <class T>
struct EigenField;
template <>
struct EigenField<Rational> {
    using type = QuadExt;
};
template <>
struct EigenField<ComplexFloat> {
    using type = ComplexFloat;
};

/// Field holding the eigenvalues and fixed points for coefficients in T.
template <class T>
using eigen_t = typename EigenField<T>::type;

template <class T>
concept ClassifiableField = std::same_as<T, Rational> || std::same_as<T, ComplexFloat>;

struct ClassifyOptions {
    /// Working precision for the complex tower (the larger of this and the input precision wins).
    long precision_bits = kDefaultPrecisionBits;
    /// Relative tolerance τ = 2^tolerance_log2 for modulus comparison and zero tests.
    long tolerance_log2 = -64;
    /// Values within 2^(guard_bits - precision) of zero (relative) count as exact zeros;
    /// values between that and τ raise PrecisionExhausted.
    long guard_bits = 16;
};

template <Field T>
struct PeriodMatrix {
    T m11, m12, m21, m22;
    T trace, det;

    static PeriodMatrix from_entries(T m11, T m12, T m21, T m22);
};

enum class ModulusRelation { strictly_dominant, equal_distinct, equal_repeated };

std::string_view to_string(ModulusRelation r) noexcept;

template <class E>
struct EigenSplit {
    E lambda1, lambda2;
    ModulusRelation relation;
    std::optional<E> x1, x2; // present when m21 = B(p-1) != 0
};

enum class VerdictKind { Convergent, DivergentZeroDenominator, DivergentEqualModulus, DivergentThiele };

std::string_view to_string(VerdictKind k) noexcept;

template <class E>
struct Verdict {
    VerdictKind kind;
    std::optional<E> limit;       // Convergent
    long thiele_q = -1;           // DivergentThiele
    std::optional<E> sublimit_x2; // DivergentThiele
};

template <ClassifiableField T>
struct StolzReport {
    PeriodMatrix<T> matrix;
    std::optional<EigenSplit<eigen_t<T>>> eigen;
    Verdict<eigen_t<T>> verdict;
};

enum class PowerCase { dominant_generic, dominant_degenerate, equal_modulus, repeated };

std::string_view to_string(PowerCase c) noexcept;

template <class E>
struct PowerStep {
    long n;
    E u, v;
    std::optional<E> ratio; // absent exactly when v = 0
};

template <class E>
struct PowerIterTrajectory {
    std::vector<PowerStep<E>> steps; // n = 0..n_steps
    E mu1, mu2;
    PowerCase power_case;
};

/// Period matrix from the convergents at p-2, p-1, p; both displayed forms and
/// det = (-1)^p·a1···ap are cross-checked in the exact towers.
template <Field T>
PeriodMatrix<T> build_period_matrix(const PeriodicCF<T>& pcf);

/// Roots of λ² - tr·λ + det with the modulus relation and fixed points.
/// Throws DegenerateMatrix when det = 0.
template <ClassifiableField T>
EigenSplit<eigen_t<T>> eigen_split(const PeriodMatrix<T>& matrix, const ClassifyOptions& options = {});

template <ClassifiableField T>
StolzReport<T> classify(const PeriodicCF<T>& pcf, const ClassifyOptions& options = {});

/// Exact trajectory (u(n+1), v(n+1)) = M·(u(n), v(n)) for n < n_steps, with the
/// eigenbasis coordinates of the start vector. Requires m21 != 0 and det != 0
/// (DegenerateMatrix) and a nonzero start (ZeroStart).
template <ClassifiableField T>
PowerIterTrajectory<eigen_t<T>> power_iterate(const PeriodMatrix<T>& matrix, const eigen_t<T>& u0,
                                              const eigen_t<T>& v0, long n_steps,
                                              const ClassifyOptions& options = {});

/// The block of b0 + a(p)/b(p-1) + ... + a2/b1 + a1/b0 + ...:
/// a' = (ap, ..., a1), b' = (b0, b(p-1), ..., b1).
template <Field T>
PeriodicCF<T> reverse_period(const PeriodicCF<T>& pcf);

template <ClassifiableField T>
struct GaloisReport {
    StolzReport<T> alpha;
    StolzReport<T> alpha_prime;
    /// True when alpha converges, i.e. the reverse-period prediction applies.
    bool prediction_applies = false;
    std::optional<Verdict<eigen_t<T>>> predicted;
    /// Observed verdict for alpha' agrees with the prediction (vacuously true when it does not apply).
    bool relation_holds = true;
};

/// Classifies alpha and its reverse; when alpha converges, alpha' must converge to
/// b0 - x2 unless |λ1| > |λ2| and A'(q) = (b0 - x1)·B'(q) for some q <= p-2.
template <ClassifiableField T>
GaloisReport<T> galois_analysis(const PeriodicCF<T>& pcf, const ClassifyOptions& options = {});

enum class SpecialForm { none, galois_regular, mobius_negative };

std::string_view to_string(SpecialForm f) noexcept;

struct ConjugateReport {
    bool is_quadratic = false;
    QuadExt alpha;
    QuadExt conjugate;
    QuadExt alpha_prime;
    SpecialForm special_form = SpecialForm::none;
    /// Limit of b(p-1) ± 1/b(p-2) ± ... ± 1/b0 ± ... for the special forms.
    std::optional<QuadExt> special_limit;
    bool identity_verified = false;
};

/// For integer coefficients and an irrational limit alpha: checks x2 = alpha*,
/// alpha' - b0 = -alpha*, and for a = 1 (a = -1) that -1/alpha* (1/alpha*) is the
/// limit of b(p-1) + 1/b(p-2) + ... (b(p-1) - 1/b(p-2) - ...).
/// Throws NotIrrational for a rational limit and InvalidArgument when the
/// fraction diverges or a coefficient is not an integer.
ConjugateReport conjugate_check(const PeriodicCF<Rational>& pcf);

/// Embeds a periodic block into the complex tower.
template <Field T>
PeriodicCF<ComplexFloat> to_complex(const PeriodicCF<T>& pcf, long precision_bits);

} // namespace cfrac
