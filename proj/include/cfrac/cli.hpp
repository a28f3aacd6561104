#pragma once

#include <iosfwd>

namespace cfrac::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;           // bad arguments, malformed or ill-shaped spec file
inline constexpr int kExitZeroDenominator = 3;
inline constexpr int kExitOracleMismatch = 4;
inline constexpr int kExitNotSemiRegular = 5;
inline constexpr int kExitNotPeriodic = 6;
inline constexpr int kExitModuleError = 7;

/// Largest convergent index `eval` will compute.
inline constexpr long kMaxEvalIndex = 1'000'000;

/// Runs the command line; the report goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cfrac::cli
