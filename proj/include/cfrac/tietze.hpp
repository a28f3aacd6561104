#pragma once

// Semi-regular continued fractions: a(n) in {-1, 1}, b(n) >= 1 and
// b(n) + a(n+1) >= 1 for n >= 1. Such fractions always converge, B(n) >= 1,
// and the tails of the convergent sequence shrink like 1/B(n).

#include <optional>
#include <stop_token>
#include <vector>

#include "cfrac/cf.hpp"

namespace cfrac {

enum class SemiRegularViolation { a_not_unit, b_below_one, sum_below_one };

std::string_view to_string(SemiRegularViolation v) noexcept;

struct SemiRegularReport {
    struct Violation {
        long n;
        SemiRegularViolation which;
    };

    bool valid = true;
    std::optional<Violation> first_violation;
    long checked_up_to = 0;
};

/// Checks indices 1..n_max (clamped to the last index of a finite spec; the
/// sum condition at the last finite index is skipped since a(N+1) does not exist).
SemiRegularReport validate_semiregular(const CFSpec<Rational>& spec, long n_max);
/// Real quadratic coefficients are decided exactly; non-real ones raise TowerMismatch.
SemiRegularReport validate_semiregular(const CFSpec<QuadExt>& spec, long n_max);
/// Always raises TowerMismatch.
SemiRegularReport validate_semiregular(const CFSpec<ComplexFloat>& spec, long n_max);

enum class BoundCase { plus_case, minus_case };

std::string_view to_string(BoundCase c) noexcept;

struct DenominatorBound {
    long k;
    BoundCase bound_type; // plus: a(k+1) = 1 and B(k+n) >= k+1 for n >= 1; minus: a(k+1) = -1 and B(k) >= k+1
    long bound;           // k + 1
};

struct CertificateOptions {
    /// The chain 1 <= B(k,n) <= B(k-1,n+1) <= B(k+n) is verified for all k >= 1, n >= 0
    /// with k + n <= min(n_max, chain_limit).
    long chain_limit = 200;
};

/// Verifies the linear lower bounds for k = 1..n_max against exact B(n) values
/// together with the shifted-denominator chain. A violated bound raises
/// CertificateFailure whose message names the (k, n) witness.
std::vector<DenominatorBound> denominator_bounds_certificate(const CFSpec<Rational>& spec, long n_max,
                                                             const CertificateOptions& options = {});

struct BoundedValue {
    Rational value;
    long n_used;
    Rational error_bound;
};

struct TietzeOptions {
    long max_terms = 1'000'000;
    std::stop_token stop; // polled every 1024 terms
};

/// Returns A(n)/B(n) for the first n >= 2 with max(1/B(n-1), 1/B(n)) < epsilon, and
/// that maximum as the certified distance to the limit.
BoundedValue evaluate_tietze(const CFSpec<Rational>& spec, const Rational& epsilon, const TietzeOptions& options = {});

} // namespace cfrac
