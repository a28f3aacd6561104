#pragma once

// Batch kernels over many independent continued fractions. Every kernel has a
// serial reference path and an OpenMP path that must produce identical output.

#include <span>
#include <string>
#include <vector>

#include "cfrac/periodic.hpp"
#include "cfrac/tietze.hpp"

namespace cfrac {

enum class Execution { serial, parallel };

/// All purely periodic blocks with period 1..max_period whose a and b entries are drawn from `values`
/// (zero entries are skipped). Ordered by period, then lexicographically by (a, b).
std::vector<PeriodicCF<Rational>> enumerate_periodic(long max_period, std::span<const long> values);

std::vector<StolzReport<Rational>> classify_all(std::span<const PeriodicCF<Rational>> blocks,
                                                Execution exec = Execution::parallel);

struct CertificateOutcome {
    bool ok = false;
    std::size_t bounds_checked = 0;
    std::string failure; // CertificateFailure / validation message when !ok
};

/// Validates each spec as semi-regular up to n_max, then runs the denominator certificate.
std::vector<CertificateOutcome> certify_all(std::span<const CFSpec<Rational>> specs, long n_max,
                                            Execution exec = Execution::parallel,
                                            const CertificateOptions& options = {});

/// Threads OpenMP would use for a parallel kernel (1 when built without OpenMP).
int batch_threads();

} // namespace cfrac
