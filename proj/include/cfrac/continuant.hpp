#pragma once

// Continuants K(a1..an; b0..bn): determinants of the (n+1)x(n+1) tridiagonal
// matrix with diagonal b0..bn, superdiagonal -1 and subdiagonal a1..an.
// K(a1..an; b0..bn) = A(n) and K(a2..an; b1..bn) = B(n).

#include <vector>

#include "cfrac/cf.hpp"

namespace cfrac {

template <Field T>
struct ContinuantArgs {
    std::vector<T> a; // may be empty
    std::vector<T> b; // |b| = |a| + 1

    long order() const noexcept { return static_cast<long>(a.size()); }
};

inline constexpr long kOracleMaxOrder = 12;

/// Last-row expansion K(..n+2) = b(n+2)·K(..n+1) + a(n+2)·K(..n).
template <Field T>
T continuant(const ContinuantArgs<T>& args);

/// Cofactor expansion of the dense matrix; independent of the recurrence.
/// Throws SizeLimit for order > kOracleMaxOrder.
template <Field T>
T continuant_oracle(const ContinuantArgs<T>& args);

/// b0·K(a2..an; b1..bn) + a1·K(a3..an; b2..bn); requires order >= 2.
template <Field T>
T first_column_expansion(const ContinuantArgs<T>& args);

/// Last two convergent pairs of the reversed fraction b(n) + a(n)/b(n-1) + ... + a1/b0.
template <Field T>
struct ReverseRelations {
    T A_n;
    T B_n;
    T A_prev;
    T B_prev;
};

template <Field T>
ReverseRelations<T> reverse_relations(const CFSpec<T>& spec, long n);

/// (A(n+k), B(n+k)) assembled from the tail pair (A(n,k), B(n,k)) and the
/// pairs at n-1, n-2.
template <Field T>
ConvergentPair<T> tail_combination(const CFSpec<T>& spec, long n, long k);

/// A(n+k)B(n-1) - A(n-1)B(n+k), n >= 1, k >= 0.
template <Field T>
T generalized_cross_determinant(const CFSpec<T>& spec, long n, long k);

} // namespace cfrac
