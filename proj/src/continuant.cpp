#include "cfrac/continuant.hpp"

#include <cstdint>

namespace cfrac {

namespace {

template <Field T>
void check_args(const ContinuantArgs<T>& args)
{
    if (args.b.size() != args.a.size() + 1)
        throw Error(ErrorKind::InvalidArgument, "continuant needs |b| = |a| + 1 (got |a| = " +
                                                    std::to_string(args.a.size()) +
                                                    ", |b| = " + std::to_string(args.b.size()) + ")");
}

template <Field T>
ContinuantArgs<T> drop_front(const ContinuantArgs<T>& args, std::size_t count)
{
    return {std::vector<T>(args.a.begin() + static_cast<std::ptrdiff_t>(count), args.a.end()),
            std::vector<T>(args.b.begin() + static_cast<std::ptrdiff_t>(count), args.b.end())};
}

// Determinant by expansion along the first unused row; `used` marks consumed columns.
template <Field T>
T laplace(const std::vector<std::vector<T>>& m, std::size_t row, std::uint32_t used, const T& zero)
{
    const std::size_t size = m.size();
    if (row == size) return like(zero, 1);
    T sum = zero;
    int parity = 0; // position of column among the remaining ones
    for (std::size_t col = 0; col < size; ++col) {
        if (used & (1U << col)) continue;
        const T& entry = m[row][col];
        if (!is_zero(entry)) {
            T term = entry * laplace(m, row + 1, used | (1U << col), zero);
            sum = (parity % 2 == 0) ? sum + term : sum - term;
        }
        ++parity;
    }
    return sum;
}

} // namespace

template <Field T>
T continuant(const ContinuantArgs<T>& args)
{
    check_args(args);
    const T& b0 = args.b[0];
    T prev = like(b0, 1); // K of the empty block
    T cur = b0;
    for (std::size_t i = 0; i < args.a.size(); ++i) {
        T next = args.b[i + 1] * cur + args.a[i] * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

template <Field T>
T continuant_oracle(const ContinuantArgs<T>& args)
{
    check_args(args);
    if (args.order() > kOracleMaxOrder)
        throw Error(ErrorKind::SizeLimit,
                    "oracle limited to order " + std::to_string(kOracleMaxOrder) + ", got " +
                        std::to_string(args.order()),
                    args.order());
    const std::size_t size = args.b.size();
    const T zero = like(args.b[0], 0);
    std::vector<std::vector<T>> m(size, std::vector<T>(size, zero));
    for (std::size_t i = 0; i < size; ++i) {
        m[i][i] = args.b[i];
        if (i + 1 < size) m[i][i + 1] = like(zero, -1);
        if (i >= 1) m[i][i - 1] = args.a[i - 1];
    }
    return laplace(m, 0, 0, zero);
}

template <Field T>
T first_column_expansion(const ContinuantArgs<T>& args)
{
    check_args(args);
    if (args.order() < 2)
        throw Error(ErrorKind::SizeLimit, "first-column expansion needs order >= 2", args.order());
    return args.b[0] * continuant(drop_front(args, 1)) + args.a[0] * continuant(drop_front(args, 2));
}

template <Field T>
ReverseRelations<T> reverse_relations(const CFSpec<T>& spec, long n)
{
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "reverse relations need n >= 1", n);
    std::vector<T> a;
    std::vector<T> b;
    a.reserve(static_cast<std::size_t>(n));
    b.reserve(static_cast<std::size_t>(n) + 1);
    b.push_back(spec.b(n));
    for (long j = 1; j <= n; ++j) {
        a.push_back(spec.a(n + 1 - j));
        b.push_back(spec.b(n - j));
    }
    const auto rows = convergent_table(CFSpec<T>::finite(std::move(a), std::move(b)), n);
    const auto& last = rows[static_cast<std::size_t>(n + 1)];
    const auto& prev = rows[static_cast<std::size_t>(n)];
    return {last.A, last.B, prev.A, prev.B};
}

template <Field T>
ConvergentPair<T> tail_combination(const CFSpec<T>& spec, long n, long k)
{
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "tail combination needs n >= 1", n);
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "tail combination needs k >= 0", k);
    const auto tail = shifted_table(spec, n, k).back();
    const auto head = convergent_table(spec, n - 1);
    const auto& p1 = head[static_cast<std::size_t>(n)];     // index n-1
    const auto& p2 = head[static_cast<std::size_t>(n - 1)]; // index n-2
    const T an = spec.a(n);
    return {n + k, tail.A * p1.A + an * tail.B * p2.A, tail.A * p1.B + an * tail.B * p2.B};
}

template <Field T>
T generalized_cross_determinant(const CFSpec<T>& spec, long n, long k)
{
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "generalized cross determinant needs n >= 1", n);
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "generalized cross determinant needs k >= 0", k);
    const auto rows = convergent_table(spec, n + k);
    const auto& far = rows[static_cast<std::size_t>(n + k + 1)];
    const auto& prev = rows[static_cast<std::size_t>(n)];
    return far.A * prev.B - prev.A * far.B;
}

#define CFRAC_INSTANTIATE_CONTINUANT(T)                                                   \
    template T continuant<T>(const ContinuantArgs<T>&);                                   \
    template T continuant_oracle<T>(const ContinuantArgs<T>&);                            \
    template T first_column_expansion<T>(const ContinuantArgs<T>&);                       \
    template ReverseRelations<T> reverse_relations<T>(const CFSpec<T>&, long);            \
    template ConvergentPair<T> tail_combination<T>(const CFSpec<T>&, long, long);         \
    template T generalized_cross_determinant<T>(const CFSpec<T>&, long, long);

CFRAC_INSTANTIATE_CONTINUANT(Rational)
CFRAC_INSTANTIATE_CONTINUANT(QuadExt)
CFRAC_INSTANTIATE_CONTINUANT(ComplexFloat)

#undef CFRAC_INSTANTIATE_CONTINUANT

} // namespace cfrac
