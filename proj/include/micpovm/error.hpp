#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace micpovm {

enum class ErrorKind {
  DimensionMismatch,
  NumericalError,
  NotPositive,
  NotStrictlyPositive,
  InvalidCount,
  LinearlyDependent,
  SingularSum,
  DegenerateCoefficient,
  NotNormalized,
  DegenerateOperator,
  NotOrthogonal,
  NotHermitian,
  InvalidDistribution,
  MissingDuals,
  InvalidRank,
  InvalidState,
  InvalidOutcome,
  DimensionUnsupported,
  MalformedInput,
};

std::string_view error_name(ErrorKind kind) noexcept;

// All library failures surface as this exception; `name()` is the stable
// machine-readable identifier printed by the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace micpovm
