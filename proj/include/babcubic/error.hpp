#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace babcubic {

enum class ErrorCode {
  Parse,
  DivisionByZero,
  ZeroInput,
  NegativeInput,
  NotFiniteExpansion,
  NotInteger,
  NotPerfectCube,
  InvalidRange,
  NotFound,
  NoRationalSolution,
  NoScaling,
  StructureMismatch,
  NonIntegerTarget,
  InconsistentData,
  MultipleSolutions,
  ConventionViolation,
  MalformedQuery,
  NoScaleFound,
  PythagorasCheckFailed,
  NonPositiveProduct,
  ExpectationMismatch,
  UndefinedRegister,
};

std::string_view error_name(ErrorCode code);

// Usage-class errors (bad input text, bad ranges) as opposed to domain
// outcomes such as NotFound. The CLI maps them to different exit codes.
bool is_usage_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0,
             std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace babcubic
