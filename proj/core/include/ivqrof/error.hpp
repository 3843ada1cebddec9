#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ivqrof {

enum class ErrorCode {
  IntervalOrderViolation,
  RungConstraintViolation,
  DomainError,
  NonPositiveScalar,
  NonPositivePhi,
  InvalidParameter,
  BothExponentsZero,
  EmptyInput,
  WeightDimensionMismatch,
  WeightSumViolation,
  Infeasible,
  NumericalDegeneracy,
  SyntaxError,
  SchemaError,
  ValueError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Numerical failures map to CLI exit code 2, everything else is an input error.
constexpr bool is_numerical(ErrorCode code) noexcept {
  return code == ErrorCode::NumericalDegeneracy;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ivqrof
