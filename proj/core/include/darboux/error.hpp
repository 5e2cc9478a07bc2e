#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace darboux {

enum class ErrorCode {
  VariableCountMismatch,
  NotDivisible,
  DivisionByZero,
  BothZero,
  IndexOutOfRange,
  ConstantInput,
  ZeroForm,
  NotLDS,
  DegreeMismatch,
  NotInvariant,
  NotSquarefree,
  ConstantPolynomial,
  NotCoprime,
  MixedDimensions,
  FlatnessViolated,
  InsufficientHypersurfaces,
  NotProportional,
  RatioNotFirstIntegral,
  InternalInconsistency,
  SyntaxError,
  UndeclaredVariable,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `subject()` names the offending
/// object (a polynomial, a hypersurface index, a token) when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string subject = {})
      : std::runtime_error(std::move(message)), code_(code), subject_(std::move(subject)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& subject() const noexcept { return subject_; }

 private:
  ErrorCode code_;
  std::string subject_;
};

/// Parse failures carry a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::string message, std::size_t line, std::size_t column,
             std::string subject = {})
      : Error(code, std::move(message), std::move(subject)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace darboux
