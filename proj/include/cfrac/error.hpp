#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cfrac {

enum class ErrorKind {
    CoefficientUnavailable,
    ZeroDenominator,
    DivisionByZero,
    TowerMismatch,
    SizeLimit,
    CertificateFailure,
    IterationCap,
    Cancelled,
    DegenerateMatrix,
    ZeroStart,
    PrecisionExhausted,
    NotIrrational,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `kind()` is what callers dispatch on;
/// `index()` carries the offending coefficient/convergent index when one exists.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, long index = -2)
        : std::runtime_error(what), kind_(kind), index_(index) {}

    ErrorKind kind() const noexcept { return kind_; }
    long index() const noexcept { return index_; }
    bool has_index() const noexcept { return index_ != -2; }

private:
    ErrorKind kind_;
    long index_;
};

} // namespace cfrac
