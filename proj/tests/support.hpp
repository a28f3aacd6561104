#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cfrac/cf.hpp"

namespace cfrac::testing {

inline constexpr std::uint64_t kSeed = 0x5eed'c0ffee'2024ULL;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline long nonzero(Rng& rng, long lo, long hi)
{
    for (;;)
        if (const long v = uniform(rng, lo, hi); v != 0) return v;
}

inline std::vector<Rational> nonzero_list(Rng& rng, std::size_t n, long lo, long hi)
{
    std::vector<Rational> out;
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(nonzero(rng, lo, hi));
    return out;
}

/// Finite fraction with a1..an and b0..bn drawn from [lo, hi] \ {0}.
inline CFSpec<Rational> random_finite(Rng& rng, long n, long lo = -5, long hi = 5)
{
    auto a = nonzero_list(rng, static_cast<std::size_t>(n), lo, hi);
    auto b = nonzero_list(rng, static_cast<std::size_t>(n) + 1, lo, hi);
    return CFSpec<Rational>::finite(std::move(a), std::move(b));
}

inline PeriodicCF<Rational> random_periodic(Rng& rng, long p, long lo = -3, long hi = 3)
{
    return PeriodicCF<Rational>(nonzero_list(rng, static_cast<std::size_t>(p), lo, hi),
                                nonzero_list(rng, static_cast<std::size_t>(p), lo, hi));
}

/// a(n) in {-1, 1}, b(n) rational in [1, 4] with b(n) + a(n+1) >= 1.
inline CFSpec<Rational> random_semiregular(Rng& rng, long n)
{
    std::vector<Rational> a, b;
    b.emplace_back(uniform(rng, -3, 3)); // b0 is unconstrained
    for (long i = 1; i <= n; ++i) a.emplace_back(uniform(rng, 0, 1) ? 1 : -1);
    for (long i = 1; i <= n; ++i) {
        const bool next_minus = i < n && a[static_cast<std::size_t>(i)] == Rational(-1);
        const long den = uniform(rng, 1, 6);
        const long lo = next_minus ? 2 * den : den;
        b.emplace_back(Rational(Integer(uniform(rng, lo, 4 * den)), Integer(den)));
    }
    return CFSpec<Rational>::finite(std::move(a), std::move(b));
}

} // namespace cfrac::testing
