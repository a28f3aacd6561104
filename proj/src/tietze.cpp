#include "cfrac/tietze.hpp"

#include <algorithm>

namespace cfrac {

std::string_view to_string(SemiRegularViolation v) noexcept
{
    switch (v) {
    case SemiRegularViolation::a_not_unit: return "a_not_unit";
    case SemiRegularViolation::b_below_one: return "b_below_one";
    case SemiRegularViolation::sum_below_one: return "sum_below_one";
    }
    return "?";
}

std::string_view to_string(BoundCase c) noexcept
{
    return c == BoundCase::plus_case ? "plus_case" : "minus_case";
}

namespace {

int real_sign(const Rational& x) { return x.sign(); }
int real_sign(const QuadExt& x) { return x.sign(); }

template <class T>
SemiRegularReport validate(const CFSpec<T>& spec, long n_max)
{
    if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "validation needs n_max >= 1", n_max);
    const auto last = spec.last_index();
    const long upto = last ? std::min(n_max, *last) : n_max;
    const T one = like(spec.b(0), 1);
    SemiRegularReport report;
    report.checked_up_to = upto;
    auto fail = [&](long n, SemiRegularViolation which) {
        report.valid = false;
        report.first_violation = SemiRegularReport::Violation{n, which};
        return report;
    };
    for (long n = 1; n <= upto; ++n) {
        const T an = spec.a(n);
        if (!(an == one || an == -one)) return fail(n, SemiRegularViolation::a_not_unit);
        const T bn = spec.b(n);
        if (real_sign(bn - one) < 0) return fail(n, SemiRegularViolation::b_below_one);
        if (last && n == *last) break;
        if (real_sign(bn + spec.a(n + 1) - one) < 0) return fail(n, SemiRegularViolation::sum_below_one);
    }
    return report;
}

[[noreturn]] void certificate_failure(const std::string& what, long k, long n)
{
    throw Error(ErrorKind::CertificateFailure,
                what + " fails at k=" + std::to_string(k) + ", n=" + std::to_string(n), k);
}

} // namespace

SemiRegularReport validate_semiregular(const CFSpec<Rational>& spec, long n_max) { return validate(spec, n_max); }

SemiRegularReport validate_semiregular(const CFSpec<QuadExt>& spec, long n_max) { return validate(spec, n_max); }

SemiRegularReport validate_semiregular(const CFSpec<ComplexFloat>&, long)
{
    throw Error(ErrorKind::TowerMismatch, "semi-regular conditions need real coefficients");
}

std::vector<DenominatorBound> denominator_bounds_certificate(const CFSpec<Rational>& spec, long n_max,
                                                             const CertificateOptions& options)
{
    if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "certificate needs n_max >= 1", n_max);
    const auto last = spec.last_index();
    const long upto = last ? std::min(n_max, *last) : n_max;
    const auto table = convergent_table(spec, upto);
    auto B = [&](long i) -> const Rational& { return table[static_cast<std::size_t>(i + 1)].B; };

    std::vector<DenominatorBound> bounds;
    // a(k+1) must exist, so k stops one short of a finite spec's end.
    const long k_max = last ? std::min(upto, *last - 1) : upto;
    for (long k = 1; k <= k_max; ++k) {
        const Rational bound(k + 1);
        if (spec.a(k + 1) == Rational(1)) {
            for (long m = k + 1; m <= upto; ++m)
                if (B(m) < bound) certificate_failure("B(k+n) >= k+1 with a(k+1) = 1", k, m - k);
            bounds.push_back({k, BoundCase::plus_case, k + 1});
        } else {
            if (B(k) < bound) certificate_failure("B(k) >= k+1 with a(k+1) = -1", k, 0);
            bounds.push_back({k, BoundCase::minus_case, k + 1});
        }
    }

    // Chain over shifted denominators: rows[k][n + 1] = B(k, n).
    const long limit = std::min(upto, options.chain_limit);
    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(limit) + 1);
    for (long k = 0; k <= limit; ++k) {
        std::vector<Rational> col;
        for (const auto& r : shifted_table(spec, k, limit - k)) col.push_back(r.B);
        rows.push_back(std::move(col));
    }
    auto Bk = [&](long k, long n) -> const Rational& {
        return rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(n + 1)];
    };
    const Rational one(1);
    for (long k = 1; k <= limit; ++k) {
        for (long n = 0; k + n <= limit; ++n) {
            if (Bk(k, n) < one) certificate_failure("1 <= B(k,n)", k, n);
            if (Bk(k - 1, n + 1) < Bk(k, n)) certificate_failure("B(k,n) <= B(k-1,n+1)", k, n);
            if (B(k + n) < Bk(k - 1, n + 1)) certificate_failure("B(k-1,n+1) <= B(k+n)", k, n);
        }
    }
    return bounds;
}

BoundedValue evaluate_tietze(const CFSpec<Rational>& spec, const Rational& epsilon, const TietzeOptions& options)
{
    if (epsilon.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "epsilon must be positive");
    // A(n-2), A(n-1), B(n-2), B(n-1) at the top of iteration n.
    Rational a_prev2(1), a_prev1 = spec.b(0);
    Rational b_prev2(0), b_prev1(1);
    for (long n = 1; n <= options.max_terms; ++n) {
        if ((n & 1023) == 0 && options.stop.stop_requested())
            throw Error(ErrorKind::Cancelled, "evaluation cancelled at n=" + std::to_string(n), n);
        const Rational an = spec.a(n);
        const Rational bn = spec.b(n);
        Rational a_cur = bn * a_prev1 + an * a_prev2;
        Rational b_cur = bn * b_prev1 + an * b_prev2;
        if (n >= 2) {
            if (b_prev1.sign() <= 0 || b_cur.sign() <= 0)
                throw Error(ErrorKind::InvalidArgument,
                            "nonpositive denominator at n=" + std::to_string(n) + ": spec is not semi-regular", n);
            const Rational bound = std::max(b_prev1.inverse(), b_cur.inverse());
            if (bound < epsilon) return {a_cur / b_cur, n, bound};
        }
        a_prev2 = std::move(a_prev1);
        a_prev1 = std::move(a_cur);
        b_prev2 = std::move(b_prev1);
        b_prev1 = std::move(b_cur);
    }
    throw Error(ErrorKind::IterationCap,
                "error bound still >= epsilon after " + std::to_string(options.max_terms) + " terms",
                options.max_terms);
}

} // namespace cfrac
