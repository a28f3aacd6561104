// Serial vs OpenMP timings for the batch kernels.
//   bench_batch [max_period] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>

#include "cfrac/batch.hpp"

using namespace cfrac;

namespace {

double best_of(int repeats, const std::function<void()>& fn)
{
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

std::vector<CFSpec<Rational>> semiregular_specs(std::size_t count, long n)
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> coin(0, 1), num(0, 1000);
    std::vector<CFSpec<Rational>> out;
    for (std::size_t s = 0; s < count; ++s) {
        std::vector<Rational> a, b{Rational(1)};
        for (long i = 1; i <= n; ++i) a.emplace_back(coin(rng) ? 1 : -1);
        for (long i = 1; i <= n; ++i) {
            const bool next_minus = i < n && a[static_cast<std::size_t>(i)] == Rational(-1);
            b.emplace_back((next_minus ? 2 : 1) + num(rng) % 3);
        }
        out.push_back(CFSpec<Rational>::finite(std::move(a), std::move(b)));
    }
    return out;
}

void row(const char* name, std::size_t items, double serial, double parallel, bool same)
{
    std::printf("%-14s %8zu %12.4f %12.4f %8.2fx %s\n", name, items, serial, parallel, serial / parallel,
                same ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv)
{
    const long max_period = argc > 1 ? std::atol(argv[1]) : 3;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    std::printf("threads: %d\n", batch_threads());
    std::printf("%-14s %8s %12s %12s %9s\n", "kernel", "items", "serial s", "parallel s", "speedup");

    const long values[] = {-2, -1, 1, 2};
    const auto blocks = enumerate_periodic(max_period, values);
    std::vector<StolzReport<Rational>> rs, rp;
    const double cs = best_of(repeats, [&] { rs = classify_all(blocks, Execution::serial); });
    const double cp = best_of(repeats, [&] { rp = classify_all(blocks, Execution::parallel); });
    bool same = rs.size() == rp.size();
    for (std::size_t i = 0; same && i < rs.size(); ++i)
        same = rs[i].verdict.kind == rp[i].verdict.kind && rs[i].verdict.limit == rp[i].verdict.limit;
    row("classify_all", blocks.size(), cs, cp, same);

    const auto specs = semiregular_specs(64, 120);
    std::vector<CertificateOutcome> os, op;
    const double ts = best_of(repeats, [&] { os = certify_all(specs, 120, Execution::serial); });
    const double tp = best_of(repeats, [&] { op = certify_all(specs, 120, Execution::parallel); });
    same = os.size() == op.size();
    for (std::size_t i = 0; same && i < os.size(); ++i)
        same = os[i].ok == op[i].ok && os[i].bounds_checked == op[i].bounds_checked;
    row("certify_all", specs.size(), ts, tp, same);
}
