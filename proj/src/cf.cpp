#include "cfrac/cf.hpp"

#include <algorithm>

namespace cfrac {

template <Field T>
PeriodicCF<T>::PeriodicCF(std::vector<T> a, std::vector<T> b) : a_(std::move(a)), b_(std::move(b))
{
    if (a_.empty()) throw Error(ErrorKind::InvalidArgument, "period must be at least 1");
    if (a_.size() != b_.size())
        throw Error(ErrorKind::InvalidArgument, "periodic block needs |a| = |b| = p");
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (is_zero(a_[i]))
            throw Error(ErrorKind::InvalidArgument, "periodic coefficient a" + std::to_string(i + 1) + " is zero",
                        static_cast<long>(i + 1));
        if (is_zero(b_[i]))
            throw Error(ErrorKind::InvalidArgument, "periodic coefficient b" + std::to_string(i) + " is zero",
                        static_cast<long>(i));
    }
}

template <Field T>
CFSpec<T> CFSpec<T>::finite(std::vector<T> a, std::vector<T> b)
{
    if (b.size() != a.size() + 1)
        throw Error(ErrorKind::InvalidArgument, "finite spec needs |b| = |a| + 1 (got |a| = " +
                                                    std::to_string(a.size()) + ", |b| = " + std::to_string(b.size()) +
                                                    ")");
    return CFSpec(FiniteCoefficients<T>{std::move(a), std::move(b)});
}

template <Field T>
CFSpec<T> CFSpec<T>::periodic(PeriodicCF<T> pcf)
{
    return CFSpec(std::move(pcf));
}

template <Field T>
CFSpec<T> CFSpec<T>::generator(GeneratedCoefficients<T> gen)
{
    return CFSpec(std::move(gen));
}

template <Field T>
T CFSpec<T>::a(long n) const
{
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "a is indexed from 1", n);
    return std::visit(
        [n](const auto& s) -> T {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, FiniteCoefficients<T>>) {
                if (static_cast<std::size_t>(n) > s.a.size())
                    throw Error(ErrorKind::CoefficientUnavailable, "a" + std::to_string(n) + " not available", n);
                return s.a[static_cast<std::size_t>(n - 1)];
            } else if constexpr (std::is_same_v<S, PeriodicCF<T>>) {
                return s.a(n);
            } else {
                return s.a(n);
            }
        },
        source_);
}

template <Field T>
T CFSpec<T>::b(long n) const
{
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "b is indexed from 0", n);
    return std::visit(
        [n](const auto& s) -> T {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, FiniteCoefficients<T>>) {
                if (static_cast<std::size_t>(n) >= s.b.size())
                    throw Error(ErrorKind::CoefficientUnavailable, "b" + std::to_string(n) + " not available", n);
                return s.b[static_cast<std::size_t>(n)];
            } else if constexpr (std::is_same_v<S, PeriodicCF<T>>) {
                return s.b(n);
            } else {
                return s.b(n);
            }
        },
        source_);
}

template <Field T>
std::optional<long> CFSpec<T>::last_index() const
{
    if (const auto* f = std::get_if<FiniteCoefficients<T>>(&source_)) return static_cast<long>(f->a.size());
    return std::nullopt;
}

template <Field T>
std::optional<PeriodicCF<T>> CFSpec<T>::as_periodic() const
{
    if (const auto* p = std::get_if<PeriodicCF<T>>(&source_)) return *p;
    if (const auto* g = std::get_if<GeneratedCoefficients<T>>(&source_)) return g->periodic_form;
    return std::nullopt;
}

template <Field T>
std::vector<ConvergentPair<T>> convergent_table(const CFSpec<T>& spec, long n_max)
{
    if (n_max < 0) throw Error(ErrorKind::InvalidArgument, "n_max must be >= 0", n_max);
    if (const auto last = spec.last_index(); last && *last < n_max)
        throw Error(ErrorKind::CoefficientUnavailable,
                    "spec has coefficients up to index " + std::to_string(*last) + ", need " + std::to_string(n_max),
                    *last + 1);
    const T b0 = spec.b(0);
    std::vector<ConvergentPair<T>> rows;
    rows.reserve(static_cast<std::size_t>(n_max) + 2);
    rows.push_back({-1, like(b0, 1), like(b0, 0)});
    rows.push_back({0, b0, like(b0, 1)});
    for (long n = 1; n <= n_max; ++n) {
        const T an = spec.a(n);
        const T bn = spec.b(n);
        const auto& p1 = rows[static_cast<std::size_t>(n)];
        const auto& p2 = rows[static_cast<std::size_t>(n - 1)];
        rows.push_back({n, bn * p1.A + an * p2.A, bn * p1.B + an * p2.B});
    }
    return rows;
}

template <Field T>
T evaluate_convergent(const CFSpec<T>& spec, long n)
{
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "convergent index must be >= 0", n);
    const auto rows = convergent_table(spec, n);
    const auto& last = rows.back();
    if (is_zero(last.B))
        throw Error(ErrorKind::ZeroDenominator, "B(" + std::to_string(n) + ") = 0: convergent undefined", n);
    return last.A / last.B;
}

template <Field T>
T cross_determinant(const CFSpec<T>& spec, long n)
{
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "cross determinant needs n >= 1", n);
    const auto rows = convergent_table(spec, n);
    const auto& cur = rows[static_cast<std::size_t>(n + 1)];
    const auto& prev = rows[static_cast<std::size_t>(n)];
    return cur.A * prev.B - prev.A * cur.B;
}

template <Field T>
T signed_a_product(const CFSpec<T>& spec, long n)
{
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "product needs n >= 1", n);
    T prod = spec.a(1);
    for (long i = 2; i <= n; ++i) prod = prod * spec.a(i);
    return (n % 2 == 1) ? prod : -prod;
}

template <Field T>
std::vector<ShiftedPair<T>> shifted_table(const CFSpec<T>& spec, long k, long n_max)
{
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "shift k must be >= 0", k);
    if (n_max < -1) throw Error(ErrorKind::InvalidArgument, "n_max must be >= -1", n_max);
    if (const auto last = spec.last_index(); last && *last < k + n_max)
        throw Error(ErrorKind::CoefficientUnavailable,
                    "spec has coefficients up to index " + std::to_string(*last) + ", need " +
                        std::to_string(k + n_max),
                    *last + 1);
    const T bk = spec.b(k);
    std::vector<ShiftedPair<T>> rows;
    rows.reserve(static_cast<std::size_t>(n_max) + 2);
    rows.push_back({k, -1, like(bk, 1), like(bk, 0)});
    if (n_max >= 0) rows.push_back({k, 0, bk, like(bk, 1)});
    for (long n = 1; n <= n_max; ++n) {
        const T an = spec.a(k + n);
        const T bn = spec.b(k + n);
        const auto& p1 = rows[static_cast<std::size_t>(n)];
        const auto& p2 = rows[static_cast<std::size_t>(n - 1)];
        rows.push_back({k, n, bn * p1.A + an * p2.A, bn * p1.B + an * p2.B});
    }
    return rows;
}

template <Field T>
T successive_difference(const CFSpec<T>& spec, long n)
{
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "successive difference needs n >= 1", n);
    const auto rows = convergent_table(spec, n);
    const auto& cur = rows[static_cast<std::size_t>(n + 1)];
    const auto& prev = rows[static_cast<std::size_t>(n)];
    if (is_zero(prev.B))
        throw Error(ErrorKind::ZeroDenominator, "B(" + std::to_string(n - 1) + ") = 0", n - 1);
    if (is_zero(cur.B)) throw Error(ErrorKind::ZeroDenominator, "B(" + std::to_string(n) + ") = 0", n);
    return cur.A / cur.B - prev.A / prev.B;
}

namespace {

const std::vector<Rational>& required_list(const std::map<std::string, std::vector<Rational>>& params,
                                           const std::string& gen, const std::string& key)
{
    const auto it = params.find(key);
    if (it == params.end() || it->second.empty())
        throw Error(ErrorKind::InvalidArgument, "generator '" + gen + "' needs a non-empty '" + key + "' list");
    return it->second;
}

GeneratedCoefficients<Rational> periodic_generator(std::string name,
                                                   std::map<std::string, std::vector<Rational>> params,
                                                   const std::vector<Rational>& b_block, long a_value)
{
    std::vector<Rational> a_block(b_block.size(), Rational(a_value));
    PeriodicCF<Rational> pcf(a_block, b_block);
    GeneratedCoefficients<Rational> gen;
    gen.name = std::move(name);
    gen.params = std::move(params);
    gen.a = [pcf](long n) { return pcf.a(n); };
    gen.b = [pcf](long n) { return pcf.b(n); };
    gen.periodic_form = std::move(pcf);
    return gen;
}

} // namespace

const std::vector<std::string>& generator_names()
{
    static const std::vector<std::string> names{"regular", "negative", "sqrt2", "golden"};
    return names;
}

CFSpec<Rational> make_generator(const std::string& name, const std::map<std::string, std::vector<Rational>>& params)
{
    if (name == "regular")
        return CFSpec<Rational>::generator(periodic_generator(name, params, required_list(params, name, "b"), 1));
    if (name == "negative")
        return CFSpec<Rational>::generator(periodic_generator(name, params, required_list(params, name, "b"), -1));
    if (name == "golden") return CFSpec<Rational>::generator(periodic_generator(name, {}, {Rational(1)}, 1));
    if (name == "sqrt2") {
        GeneratedCoefficients<Rational> gen;
        gen.name = name;
        gen.a = [](long) { return Rational(1); };
        gen.b = [](long n) { return Rational(n == 0 ? 1 : 2); };
        return CFSpec<Rational>::generator(std::move(gen));
    }
    throw Error(ErrorKind::InvalidArgument, "unknown generator '" + name + "'");
}

#define CFRAC_INSTANTIATE_CF(T)                                                                        \
    template class PeriodicCF<T>;                                                                      \
    template class CFSpec<T>;                                                                          \
    template std::vector<ConvergentPair<T>> convergent_table<T>(const CFSpec<T>&, long);               \
    template T evaluate_convergent<T>(const CFSpec<T>&, long);                                         \
    template T cross_determinant<T>(const CFSpec<T>&, long);                                           \
    template T signed_a_product<T>(const CFSpec<T>&, long);                                            \
    template std::vector<ShiftedPair<T>> shifted_table<T>(const CFSpec<T>&, long, long);               \
    template T successive_difference<T>(const CFSpec<T>&, long);

CFRAC_INSTANTIATE_CF(Rational)
CFRAC_INSTANTIATE_CF(QuadExt)
CFRAC_INSTANTIATE_CF(ComplexFloat)

#undef CFRAC_INSTANTIATE_CF

} // namespace cfrac
