#include "cfrac/error.hpp"

namespace cfrac {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::CoefficientUnavailable: return "CoefficientUnavailable";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::TowerMismatch: return "TowerMismatch";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
    case ErrorKind::IterationCap: return "IterationCap";
    case ErrorKind::Cancelled: return "Cancelled";
    case ErrorKind::DegenerateMatrix: return "DegenerateMatrix";
    case ErrorKind::ZeroStart: return "ZeroStart";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NotIrrational: return "NotIrrational";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace cfrac
