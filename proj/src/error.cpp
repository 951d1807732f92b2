#include "babcubic/error.hpp"

namespace babcubic {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::NotFiniteExpansion: return "NotFiniteExpansion";
    case ErrorCode::NotInteger: return "NotInteger";
    case ErrorCode::NotPerfectCube: return "NotPerfectCube";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::NoRationalSolution: return "NoRationalSolution";
    case ErrorCode::NoScaling: return "NoScaling";
    case ErrorCode::StructureMismatch: return "StructureMismatch";
    case ErrorCode::NonIntegerTarget: return "NonIntegerTarget";
    case ErrorCode::InconsistentData: return "InconsistentData";
    case ErrorCode::MultipleSolutions: return "MultipleSolutions";
    case ErrorCode::ConventionViolation: return "ConventionViolation";
    case ErrorCode::MalformedQuery: return "MalformedQuery";
    case ErrorCode::NoScaleFound: return "NoScaleFound";
    case ErrorCode::PythagorasCheckFailed: return "PythagorasCheckFailed";
    case ErrorCode::NonPositiveProduct: return "NonPositiveProduct";
    case ErrorCode::ExpectationMismatch: return "ExpectationMismatch";
    case ErrorCode::UndefinedRegister: return "UndefinedRegister";
  }
  return "Error";
}

bool is_usage_error(ErrorCode code) {
  return code == ErrorCode::Parse || code == ErrorCode::InvalidRange ||
         code == ErrorCode::MalformedQuery;
}

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column)
    : Error(ErrorCode::Parse,
            line == 0 ? message
                      : std::to_string(line) + ":" + std::to_string(column) +
                            ": " + message),
      line_(line),
      column_(column) {}

}  // namespace babcubic
