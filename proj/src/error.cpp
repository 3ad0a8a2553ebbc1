#include "micpovm/error.hpp"

namespace micpovm {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NumericalError: return "NumericalError";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NotStrictlyPositive: return "NotStrictlyPositive";
    case ErrorKind::InvalidCount: return "InvalidCount";
    case ErrorKind::LinearlyDependent: return "LinearlyDependent";
    case ErrorKind::SingularSum: return "SingularSum";
    case ErrorKind::DegenerateCoefficient: return "DegenerateCoefficient";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::DegenerateOperator: return "DegenerateOperator";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::MissingDuals: return "MissingDuals";
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::InvalidOutcome: return "InvalidOutcome";
    case ErrorKind::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace micpovm
