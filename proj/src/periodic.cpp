#include "cfrac/periodic.hpp"

#include <algorithm>
#include <type_traits>

namespace cfrac {

std::string_view to_string(ModulusRelation r) noexcept
{
    switch (r) {
    case ModulusRelation::strictly_dominant: return "strictly_dominant";
    case ModulusRelation::equal_distinct: return "equal_distinct";
    case ModulusRelation::equal_repeated: return "equal_repeated";
    }
    return "?";
}

std::string_view to_string(VerdictKind k) noexcept
{
    switch (k) {
    case VerdictKind::Convergent: return "Convergent";
    case VerdictKind::DivergentZeroDenominator: return "DivergentZeroDenominator";
    case VerdictKind::DivergentEqualModulus: return "DivergentEqualModulus";
    case VerdictKind::DivergentThiele: return "DivergentThiele";
    }
    return "?";
}

std::string_view to_string(PowerCase c) noexcept
{
    switch (c) {
    case PowerCase::dominant_generic: return "dominant_generic";
    case PowerCase::dominant_degenerate: return "dominant_degenerate";
    case PowerCase::equal_modulus: return "equal_modulus";
    case PowerCase::repeated: return "repeated";
    }
    return "?";
}

std::string_view to_string(SpecialForm f) noexcept
{
    switch (f) {
    case SpecialForm::none: return "none";
    case SpecialForm::galois_regular: return "galois_regular";
    case SpecialForm::mobius_negative: return "mobius_negative";
    }
    return "?";
}

namespace {

template <class E>
inline constexpr bool is_complex_v = std::is_same_v<E, ComplexFloat>;

long working_precision(const ComplexFloat& x, const ClassifyOptions& o)
{
    return std::max(o.precision_bits, x.precision());
}

// Magnitudes feed the relative zero tests; the exact towers ignore them.
BigFloat mag(const ComplexFloat& x) { return x.abs(); }
int mag(const QuadExt&) { return 0; }

template <class S>
bool decide_zero(const QuadExt& x, const S&, const ClassifyOptions&, std::string_view)
{
    return x.is_zero();
}

template <class S>
bool decide_zero(const Rational& x, const S&, const ClassifyOptions&, std::string_view)
{
    return x.is_zero();
}

// |x| <= 2^(guard - prec)·scale counts as zero; up to τ·scale it is undecidable.
bool decide_zero(const ComplexFloat& x, const BigFloat& scale, const ClassifyOptions& o, std::string_view what)
{
    if (x.is_zero()) return true;
    const long prec = working_precision(x, o);
    const BigFloat m = x.abs();
    if (m <= scale * BigFloat::pow2(o.guard_bits - prec, prec)) return true;
    if (m <= scale * BigFloat::pow2(o.tolerance_log2, prec))
        throw Error(ErrorKind::PrecisionExhausted,
                    std::string(what) + " = " + m.str(6) + " is within tolerance of zero (scale " + scale.str(6) +
                        "); raise the precision or use exact coefficients");
    return false;
}

bool same_value(const QuadExt& x, const QuadExt& y, const ClassifyOptions&) { return x == y; }

bool same_value(const ComplexFloat& x, const ComplexFloat& y, const ClassifyOptions& o)
{
    const long prec = std::max(working_precision(x, o), y.precision());
    const BigFloat scale = BigFloat(1, prec) + x.abs() + y.abs();
    return (x - y).abs() <= scale * BigFloat::pow2(o.tolerance_log2, prec);
}

QuadExt lift(const Rational& x, const ClassifyOptions&) { return QuadExt(x); }

ComplexFloat lift(const ComplexFloat& x, const ClassifyOptions& o)
{
    const long prec = working_precision(x, o);
    if (prec == x.precision()) return x;
    return ComplexFloat(x.real().with_precision(prec), x.imag().with_precision(prec));
}

template <class E>
bool same_verdict(const Verdict<E>& a, const Verdict<E>& b, const ClassifyOptions& o)
{
    if (a.kind != b.kind) return false;
    if (a.kind == VerdictKind::Convergent) return same_value(*a.limit, *b.limit, o);
    if (a.kind == VerdictKind::DivergentThiele)
        return a.thiele_q == b.thiele_q && same_value(*a.sublimit_x2, *b.sublimit_x2, o);
    return true;
}

// ---- eigenvalues --------------------------------------------------------------

EigenSplit<QuadExt> split_exact(const PeriodMatrix<Rational>& m)
{
    if (m.det.is_zero()) throw Error(ErrorKind::DegenerateMatrix, "period matrix has zero determinant");
    const Rational& tr = m.trace;
    const Rational disc = tr * tr - Rational(4) * m.det;
    const Rational half(1, 2);
    EigenSplit<QuadExt> out{QuadExt(tr * half), QuadExt(tr * half), ModulusRelation::equal_repeated, {}, {}};
    if (!disc.is_zero()) {
        const QuadExt root = QuadExt::sqrt(disc);
        const QuadExt plus = (QuadExt(tr) + root) * QuadExt(half);
        const QuadExt minus = (QuadExt(tr) - root) * QuadExt(half);
        // disc > 0: real roots, |λ+| > |λ-| iff tr > 0. disc < 0: conjugate pair of equal modulus.
        if (disc.sign() > 0 && !tr.is_zero()) {
            out.relation = ModulusRelation::strictly_dominant;
            out.lambda1 = tr.sign() > 0 ? plus : minus;
            out.lambda2 = tr.sign() > 0 ? minus : plus;
        } else {
            out.relation = ModulusRelation::equal_distinct;
            out.lambda1 = plus;
            out.lambda2 = minus;
        }
    }
    if (!m.m21.is_zero()) {
        const QuadExt m21(m.m21), m22(m.m22);
        out.x1 = (out.lambda1 - m22) / m21;
        out.x2 = (out.lambda2 - m22) / m21;
    }
    return out;
}

EigenSplit<ComplexFloat> split_complex(const PeriodMatrix<ComplexFloat>& m, const BigFloat& m21_scale,
                                       const ClassifyOptions& o)
{
    const ComplexFloat tr = lift(m.trace, o);
    const ComplexFloat det = lift(m.det, o);
    const long prec = tr.precision();
    const BigFloat det_scale = m.m11.abs() * m.m22.abs() + m.m12.abs() * m.m21.abs();
    if (decide_zero(det, det_scale, o, "det M"))
        throw Error(ErrorKind::DegenerateMatrix, "period matrix has zero determinant");

    const ComplexFloat four(4, prec), two(2, prec);
    const ComplexFloat disc = tr * tr - four * det;
    const BigFloat disc_scale = std::max(tr.abs() * tr.abs(), four.abs() * det.abs());
    EigenSplit<ComplexFloat> out{tr / two, tr / two, ModulusRelation::equal_repeated, {}, {}};
    if (!decide_zero(disc, disc_scale, o, "discriminant tr² - 4det")) {
        const ComplexFloat root = disc.sqrt();
        ComplexFloat plus = (tr + root) / two;
        ComplexFloat minus = (tr - root) / two;
        const BigFloat mp = plus.abs(), mm = minus.abs();
        const BigFloat& big = mp < mm ? mm : mp;
        const BigFloat gap = (mp - mm).abs();
        if (gap <= big * BigFloat::pow2(o.tolerance_log2, prec)) {
            out.relation = ModulusRelation::equal_distinct;
            out.lambda1 = std::move(plus);
            out.lambda2 = std::move(minus);
        } else {
            out.relation = ModulusRelation::strictly_dominant;
            const bool swap = mp < mm;
            out.lambda1 = swap ? std::move(minus) : std::move(plus);
            out.lambda2 = swap ? std::move(plus) : std::move(minus);
        }
    }
    if (!decide_zero(lift(m.m21, o), m21_scale, o, "B(p-1)")) {
        const ComplexFloat m21 = lift(m.m21, o), m22 = lift(m.m22, o);
        out.x1 = (out.lambda1 - m22) / m21;
        out.x2 = (out.lambda2 - m22) / m21;
    }
    return out;
}

template <ClassifiableField T>
EigenSplit<eigen_t<T>> split(const PeriodMatrix<T>& m, const ClassifyOptions& o, const BigFloat* m21_scale)
{
    if constexpr (std::is_same_v<T, Rational>) {
        return split_exact(m);
    } else {
        if (m21_scale) return split_complex(m, *m21_scale, o);
        const BigFloat scale = std::max(std::max(m.m11.abs(), m.m12.abs()), std::max(m.m21.abs(), m.m22.abs()));
        return split_complex(m, scale, o);
    }
}

// Magnitude envelope of the B recurrence at index n: |b(n)||B(n-1)| + |a(n)||B(n-2)|.
BigFloat b_scale(const std::vector<ConvergentPair<ComplexFloat>>& rows, const PeriodicCF<ComplexFloat>& pcf, long n)
{
    if (n <= 0) return BigFloat(1, rows.front().B.precision());
    const auto& p1 = rows[static_cast<std::size_t>(n)];
    const auto& p2 = rows[static_cast<std::size_t>(n - 1)];
    return pcf.b(n).abs() * p1.B.abs() + pcf.a(n).abs() * p2.B.abs();
}

template <ClassifiableField T>
StolzReport<T> classify_with_table(const PeriodicCF<T>& pcf, const std::vector<ConvergentPair<T>>& rows,
                                   const PeriodMatrix<T>& matrix, const ClassifyOptions& o)
{
    using E = eigen_t<T>;
    const long p = pcf.period();
    StolzReport<T> report{matrix, std::nullopt, Verdict<E>{VerdictKind::DivergentZeroDenominator, {}, -1, {}}};

    if constexpr (std::is_same_v<T, Rational>) {
        report.eigen = split<T>(matrix, o, nullptr);
    } else {
        const BigFloat scale = b_scale(rows, pcf, p - 1);
        report.eigen = split<T>(matrix, o, &scale);
    }
    const auto& eig = *report.eigen;
    if (!eig.x1) return report; // B(p-1) = 0

    switch (eig.relation) {
    case ModulusRelation::equal_repeated:
        report.verdict = {VerdictKind::Convergent, eig.x1, -1, {}};
        return report;
    case ModulusRelation::equal_distinct:
        report.verdict = {VerdictKind::DivergentEqualModulus, {}, -1, {}};
        return report;
    case ModulusRelation::strictly_dominant:
        break;
    }
    const E& x2 = *eig.x2;
    for (long q = 0; q <= p - 2; ++q) {
        const auto& row = rows[static_cast<std::size_t>(q + 1)];
        const E Aq = lift(row.A, o), Bq = lift(row.B, o);
        const E resid = Aq - x2 * Bq;
        if (decide_zero(resid, mag(Aq) + mag(x2) * mag(Bq), o, "A(q) - x2·B(q)")) {
            report.verdict = {VerdictKind::DivergentThiele, {}, q, x2};
            return report;
        }
    }
    report.verdict = {VerdictKind::Convergent, eig.x1, -1, {}};
    return report;
}

template <Field T>
void require_equal(const T& lhs, const T& rhs, const char* what)
{
    if constexpr (ExactField<T>)
        if (!(lhs == rhs)) throw Error(ErrorKind::CertificateFailure, std::string("period matrix check failed: ") + what);
}

} // namespace

template <Field T>
PeriodMatrix<T> PeriodMatrix<T>::from_entries(T m11, T m12, T m21, T m22)
{
    T trace = m11 + m22;
    T det = m11 * m22 - m12 * m21;
    return {std::move(m11), std::move(m12), std::move(m21), std::move(m22), std::move(trace), std::move(det)};
}

template <Field T>
PeriodMatrix<T> build_period_matrix(const PeriodicCF<T>& pcf)
{
    const long p = pcf.period();
    const auto spec = CFSpec<T>::periodic(pcf);
    const auto rows = convergent_table(spec, p);
    auto at = [&](long n) -> const ConvergentPair<T>& { return rows[static_cast<std::size_t>(n + 1)]; };
    const T& ap = pcf.a(p);
    auto m = PeriodMatrix<T>::from_entries(at(p - 1).A, ap * at(p - 2).A, at(p - 1).B, ap * at(p - 2).B);
    const T& b0 = pcf.b(0);
    require_equal(m.m12, at(p).A - b0 * at(p - 1).A, "a(p)A(p-2) = A(p) - b0·A(p-1)");
    require_equal(m.m22, at(p).B - b0 * at(p - 1).B, "a(p)B(p-2) = B(p) - b0·B(p-1)");
    require_equal(m.det, -signed_a_product(spec, p), "det M = (-1)^p·a1···ap");
    return m;
}

template <ClassifiableField T>
EigenSplit<eigen_t<T>> eigen_split(const PeriodMatrix<T>& matrix, const ClassifyOptions& options)
{
    return split<T>(matrix, options, nullptr);
}

template <ClassifiableField T>
StolzReport<T> classify(const PeriodicCF<T>& pcf, const ClassifyOptions& options)
{
    const auto rows = convergent_table(CFSpec<T>::periodic(pcf), pcf.period());
    return classify_with_table(pcf, rows, build_period_matrix(pcf), options);
}

template <ClassifiableField T>
PowerIterTrajectory<eigen_t<T>> power_iterate(const PeriodMatrix<T>& matrix, const eigen_t<T>& u0,
                                              const eigen_t<T>& v0, long n_steps, const ClassifyOptions& o)
{
    using E = eigen_t<T>;
    if (n_steps < 0) throw Error(ErrorKind::InvalidArgument, "n_steps must be >= 0", n_steps);
    if (is_zero(matrix.m21)) throw Error(ErrorKind::DegenerateMatrix, "power iteration needs m21 != 0");
    if (is_zero(u0) && is_zero(v0)) throw Error(ErrorKind::ZeroStart, "start vector is (0, 0)");

    const auto eig = split<T>(matrix, o, nullptr); // throws DegenerateMatrix on det = 0
    if (!eig.x1) throw Error(ErrorKind::DegenerateMatrix, "power iteration needs m21 != 0");
    const E& x1 = *eig.x1;
    const E& x2 = *eig.x2;
    const E m11 = lift(matrix.m11, o), m12 = lift(matrix.m12, o), m21 = lift(matrix.m21, o),
            m22 = lift(matrix.m22, o);

    PowerIterTrajectory<E> out{{}, u0, v0, PowerCase::repeated};
    if (eig.relation == ModulusRelation::equal_repeated) {
        // Jordan basis e1 = (x1, 1), e2' = (1/m21, 0).
        out.mu1 = v0;
        out.mu2 = m21 * (u0 - v0 * x1);
    } else {
        const E span = x1 - x2;
        out.mu1 = (u0 - v0 * x2) / span;
        out.mu2 = (v0 * x1 - u0) / span;
        if (eig.relation == ModulusRelation::equal_distinct) {
            out.power_case = PowerCase::equal_modulus;
        } else {
            const bool mu1_zero = decide_zero(u0 - v0 * x2, mag(u0) + mag(v0) * mag(x2), o, "u0 - v0·x2");
            out.power_case = mu1_zero ? PowerCase::dominant_degenerate : PowerCase::dominant_generic;
        }
    }

    out.steps.reserve(static_cast<std::size_t>(n_steps) + 1);
    E u = u0, v = v0;
    for (long n = 0;; ++n) {
        std::optional<E> ratio;
        if (!is_zero(v)) ratio = u / v;
        out.steps.push_back({n, u, v, std::move(ratio)});
        if (n == n_steps) break;
        E nu = m11 * u + m12 * v;
        E nv = m21 * u + m22 * v;
        u = std::move(nu);
        v = std::move(nv);
    }
    return out;
}

template <Field T>
PeriodicCF<T> reverse_period(const PeriodicCF<T>& pcf)
{
    const long p = pcf.period();
    std::vector<T> a, b;
    a.reserve(static_cast<std::size_t>(p));
    b.reserve(static_cast<std::size_t>(p));
    b.push_back(pcf.b(0));
    for (long k = 1; k <= p; ++k) {
        a.push_back(pcf.a(p + 1 - k));
        if (k < p) b.push_back(pcf.b(p - k));
    }
    return PeriodicCF<T>(std::move(a), std::move(b));
}

template <ClassifiableField T>
GaloisReport<T> galois_analysis(const PeriodicCF<T>& pcf, const ClassifyOptions& o)
{
    using E = eigen_t<T>;
    const PeriodicCF<T> rev = reverse_period(pcf);
    GaloisReport<T> out{classify(pcf, o), classify(rev, o), false, std::nullopt, true};
    if (out.alpha.verdict.kind != VerdictKind::Convergent) return out;

    out.prediction_applies = true;
    const auto& eig = *out.alpha.eigen;
    const E b0 = lift(pcf.b(0), o);
    const E x1_rev = b0 - *eig.x2; // limit of the reverse
    const E x2_rev = b0 - *eig.x1;
    Verdict<E> predicted{VerdictKind::Convergent, x1_rev, -1, {}};
    if (eig.relation == ModulusRelation::strictly_dominant) {
        const long p = pcf.period();
        const auto rows = convergent_table(CFSpec<T>::periodic(rev), p);
        for (long q = 0; q <= p - 2; ++q) {
            const auto& row = rows[static_cast<std::size_t>(q + 1)];
            const E Aq = lift(row.A, o), Bq = lift(row.B, o);
            if (decide_zero(Aq - x2_rev * Bq, mag(Aq) + mag(x2_rev) * mag(Bq), o, "A'(q) - (b0 - x1)·B'(q)")) {
                predicted = {VerdictKind::DivergentThiele, {}, q, x2_rev};
                break;
            }
        }
    }
    out.relation_holds = same_verdict(predicted, out.alpha_prime.verdict, o);
    out.predicted = std::move(predicted);
    return out;
}

ConjugateReport conjugate_check(const PeriodicCF<Rational>& pcf)
{
    const long p = pcf.period();
    bool all_plus = true, all_minus = true;
    for (long i = 0; i < p; ++i) {
        const Rational& a = pcf.a_block()[static_cast<std::size_t>(i)];
        const Rational& b = pcf.b_block()[static_cast<std::size_t>(i)];
        if (!a.is_integer() || !b.is_integer())
            throw Error(ErrorKind::InvalidArgument, "conjugate check needs integer coefficients");
        all_plus = all_plus && a == Rational(1);
        all_minus = all_minus && a == Rational(-1);
    }
    const auto alpha = classify(pcf);
    if (alpha.verdict.kind != VerdictKind::Convergent)
        throw Error(ErrorKind::InvalidArgument,
                    "conjugate check needs a convergent fraction, got " + std::string(to_string(alpha.verdict.kind)));
    const QuadExt& x1 = *alpha.verdict.limit;
    if (x1.is_rational()) throw Error(ErrorKind::NotIrrational, "limit " + x1.str() + " is rational");

    ConjugateReport out;
    out.is_quadratic = true;
    out.alpha = x1;
    out.conjugate = x1.conjugate();
    bool ok = *alpha.eigen->x2 == out.conjugate;

    const auto rev = classify(reverse_period(pcf));
    if (rev.verdict.kind == VerdictKind::Convergent) {
        out.alpha_prime = *rev.verdict.limit;
        ok = ok && out.alpha_prime - QuadExt(pcf.b(0)) == -out.conjugate;
    } else {
        ok = false;
    }

    if (all_plus || all_minus) {
        out.special_form = all_plus ? SpecialForm::galois_regular : SpecialForm::mobius_negative;
        std::vector<Rational> b_tail;
        for (long k = p - 1; k >= 0; --k) b_tail.push_back(pcf.b(k));
        const PeriodicCF<Rational> tail(std::vector<Rational>(static_cast<std::size_t>(p), Rational(all_plus ? 1 : -1)),
                                        std::move(b_tail));
        const auto tail_report = classify(tail);
        const QuadExt expected = all_plus ? -out.conjugate.inverse() : out.conjugate.inverse();
        if (tail_report.verdict.kind == VerdictKind::Convergent) {
            out.special_limit = *tail_report.verdict.limit;
            ok = ok && *out.special_limit == expected;
        } else {
            ok = false;
        }
    }
    out.identity_verified = ok;
    return out;
}

template <Field T>
PeriodicCF<ComplexFloat> to_complex(const PeriodicCF<T>& pcf, long precision_bits)
{
    std::vector<ComplexFloat> a, b;
    for (const auto& x : pcf.a_block()) a.push_back(cfrac::to_complex(x, precision_bits));
    for (const auto& x : pcf.b_block()) b.push_back(cfrac::to_complex(x, precision_bits));
    return PeriodicCF<ComplexFloat>(std::move(a), std::move(b));
}

#define CFRAC_INSTANTIATE_ANY(T)                                                   \
    template struct PeriodMatrix<T>;                                               \
    template PeriodMatrix<T> build_period_matrix<T>(const PeriodicCF<T>&);         \
    template PeriodicCF<T> reverse_period<T>(const PeriodicCF<T>&);                \
    template PeriodicCF<ComplexFloat> to_complex<T>(const PeriodicCF<T>&, long);

#define CFRAC_INSTANTIATE_CLASSIFY(T)                                                                        \
    template EigenSplit<eigen_t<T>> eigen_split<T>(const PeriodMatrix<T>&, const ClassifyOptions&);          \
    template StolzReport<T> classify<T>(const PeriodicCF<T>&, const ClassifyOptions&);                        \
    template PowerIterTrajectory<eigen_t<T>> power_iterate<T>(const PeriodMatrix<T>&, const eigen_t<T>&,      \
                                                              const eigen_t<T>&, long, const ClassifyOptions&); \
    template GaloisReport<T> galois_analysis<T>(const PeriodicCF<T>&, const ClassifyOptions&);

CFRAC_INSTANTIATE_ANY(Rational)
CFRAC_INSTANTIATE_ANY(QuadExt)
CFRAC_INSTANTIATE_ANY(ComplexFloat)
CFRAC_INSTANTIATE_CLASSIFY(Rational)
CFRAC_INSTANTIATE_CLASSIFY(ComplexFloat)

#undef CFRAC_INSTANTIATE_ANY
#undef CFRAC_INSTANTIATE_CLASSIFY

} // namespace cfrac
