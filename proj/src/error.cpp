#include "frobdiff/error.hpp"

namespace frobdiff {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::NotExact: return "NotExact";
    case ErrorCode::BasisViolation: return "BasisViolation";
    case ErrorCode::InconsistentTower: return "InconsistentTower";
    case ErrorCode::NotSeparable: return "NotSeparable";
    case ErrorCode::BadBasis: return "BadBasis";
    case ErrorCode::InsufficientJets: return "InsufficientJets";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::BadTwist: return "BadTwist";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::LeaderMismatch: return "LeaderMismatch";
    case ErrorCode::ShapeViolation: return "ShapeViolation";
    case ErrorCode::Exhausted: return "Exhausted";
    case ErrorCode::NotAnnihilator: return "NotAnnihilator";
    case ErrorCode::SeparantVanishes: return "SeparantVanishes";
    case ErrorCode::NotValidated: return "NotValidated";
    case ErrorCode::UnsupportedNesting: return "UnsupportedNesting";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace frobdiff
