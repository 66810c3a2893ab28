#include "qhom/error.hpp"

namespace qhom {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::ColumnNotPermutation: return "ColumnNotPermutation";
    case ErrorCode::NotSelfDistributive: return "NotSelfDistributive";
    case ErrorCode::NonUnitParameter: return "NonUnitParameter";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::EmptySeed: return "EmptySeed";
    case ErrorCode::BNotBijective: return "BNotBijective";
    case ErrorCode::SidewaysUndefined: return "SidewaysUndefined";
    case ErrorCode::SidewaysConflict: return "SidewaysConflict";
    case ErrorCode::SidewaysNotBijective: return "SidewaysNotBijective";
    case ErrorCode::DiagonalMismatch: return "DiagonalMismatch";
    case ErrorCode::DiagonalNotBijective: return "DiagonalNotBijective";
    case ErrorCode::YangBaxterFailure: return "YangBaxterFailure";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::EdgeMultiplicityError: return "EdgeMultiplicityError";
    case ErrorCode::OrientationAmbiguous: return "OrientationAmbiguous";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::TargetNotAbelian: return "TargetNotAbelian";
    case ErrorCode::ClosureFailure: return "ClosureFailure";
    case ErrorCode::GeneratorSetTooSmall: return "GeneratorSetTooSmall";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::WitnessFailure: return "WitnessFailure";
    case ErrorCode::FormatError: return "FormatError";
  }
  return "Unknown";
}

bool is_axiom_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotIdempotent:
    case ErrorCode::ColumnNotPermutation:
    case ErrorCode::NotSelfDistributive:
    case ErrorCode::BNotBijective:
    case ErrorCode::SidewaysUndefined:
    case ErrorCode::SidewaysConflict:
    case ErrorCode::SidewaysNotBijective:
    case ErrorCode::DiagonalMismatch:
    case ErrorCode::DiagonalNotBijective:
    case ErrorCode::YangBaxterFailure:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, std::string message, std::vector<std::size_t> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

ParseError::ParseError(ErrorCode code, std::size_t line, std::size_t column,
                       const std::string& what)
    : Error(code,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what,
            {}),
      line_(line),
      column_(column) {}

std::string format_elements(const std::vector<std::size_t>& zero_based) {
  std::string out = "(";
  for (std::size_t i = 0; i < zero_based.size(); ++i) {
    if (i != 0) out += ", ";
    out += std::to_string(zero_based[i] + 1);
  }
  out += ")";
  return out;
}

}  // namespace qhom
