#include "cfrac/batch.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cfrac {

namespace {

// Runs body(i) for i in [0, n); exceptions escaping a worker are rethrown after the loop.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body)
{
    if (exec == Execution::serial) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr failure;
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(cfrac_batch_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

void enumerate_block(long p, std::span<const long> values, std::vector<long>& digits, std::size_t pos,
                     std::vector<PeriodicCF<Rational>>& out)
{
    const std::size_t len = static_cast<std::size_t>(2 * p);
    if (pos == len) {
        std::vector<Rational> a, b;
        for (long i = 0; i < p; ++i) a.emplace_back(digits[static_cast<std::size_t>(i)]);
        for (long i = 0; i < p; ++i) b.emplace_back(digits[static_cast<std::size_t>(p + i)]);
        out.emplace_back(std::move(a), std::move(b));
        return;
    }
    for (long v : values) {
        if (v == 0) continue;
        digits[pos] = v;
        enumerate_block(p, values, digits, pos + 1, out);
    }
}

} // namespace

std::vector<PeriodicCF<Rational>> enumerate_periodic(long max_period, std::span<const long> values)
{
    std::vector<PeriodicCF<Rational>> out;
    for (long p = 1; p <= max_period; ++p) {
        std::vector<long> digits(static_cast<std::size_t>(2 * p));
        enumerate_block(p, values, digits, 0, out);
    }
    return out;
}

std::vector<StolzReport<Rational>> classify_all(std::span<const PeriodicCF<Rational>> blocks, Execution exec)
{
    std::vector<std::optional<StolzReport<Rational>>> slots(blocks.size());
    for_each_index(blocks.size(), exec, [&](std::size_t i) { slots[i] = classify(blocks[i]); });
    std::vector<StolzReport<Rational>> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

std::vector<CertificateOutcome> certify_all(std::span<const CFSpec<Rational>> specs, long n_max, Execution exec,
                                            const CertificateOptions& options)
{
    std::vector<CertificateOutcome> out(specs.size());
    for_each_index(specs.size(), exec, [&](std::size_t i) {
        const auto report = validate_semiregular(specs[i], n_max);
        if (!report.valid) {
            out[i].failure = "not semi-regular: " + std::string(to_string(report.first_violation->which)) +
                             " at n=" + std::to_string(report.first_violation->n);
            return;
        }
        try {
            out[i].bounds_checked = denominator_bounds_certificate(specs[i], n_max, options).size();
            out[i].ok = true;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::CertificateFailure) throw;
            out[i].failure = e.what();
        }
    });
    return out;
}

int batch_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace cfrac
