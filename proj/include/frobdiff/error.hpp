#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frobdiff {

/// Stable error codes. The CLI prints the name and maps every code except
/// SyntaxError to exit status 1.
enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  InvalidField,
  NotExact,
  BasisViolation,
  InconsistentTower,
  NotSeparable,
  BadBasis,
  InsufficientJets,
  ZeroPolynomial,
  ConstantPolynomial,
  BadTwist,
  BadExponent,
  NotCoprime,
  LeaderMismatch,
  ShapeViolation,
  Exhausted,
  NotAnnihilator,
  SeparantVanishes,
  NotValidated,
  UnsupportedNesting,
  SyntaxError,
  UnknownName,
  UsageError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure carrying the byte offset into the parsed text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message)
      : Error(ErrorCode::SyntaxError, message + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace frobdiff
