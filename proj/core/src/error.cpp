#include "ivqrof/error.hpp"

namespace ivqrof {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IntervalOrderViolation: return "IntervalOrderViolation";
    case ErrorCode::RungConstraintViolation: return "RungConstraintViolation";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NonPositiveScalar: return "NonPositiveScalar";
    case ErrorCode::NonPositivePhi: return "NonPositivePhi";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::BothExponentsZero: return "BothExponentsZero";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::WeightDimensionMismatch: return "WeightDimensionMismatch";
    case ErrorCode::WeightSumViolation: return "WeightSumViolation";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::NumericalDegeneracy: return "NumericalDegeneracy";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::ValueError: return "ValueError";
  }
  return "Unknown";
}

}  // namespace ivqrof
