#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qhom {

enum class ErrorCode {
  InvalidOrder,
  EntryOutOfRange,
  NotIdempotent,
  ColumnNotPermutation,
  NotSelfDistributive,
  NonUnitParameter,
  NotAPermutation,
  EmptySeed,
  BNotBijective,
  SidewaysUndefined,
  SidewaysConflict,
  SidewaysNotBijective,
  DiagonalMismatch,
  DiagonalNotBijective,
  YangBaxterFailure,
  SyntaxError,
  ArityError,
  EdgeMultiplicityError,
  OrientationAmbiguous,
  KindMismatch,
  TargetNotAbelian,
  ClosureFailure,
  GeneratorSetTooSmall,
  NotAbelian,
  WitnessFailure,
  FormatError,
};

std::string_view to_string(ErrorCode code);

/// True for the codes that report a failed algebraic axiom (as opposed to
/// malformed input or a bad argument).
bool is_axiom_failure(ErrorCode code);

/// Single exception type for the library. `witness()` carries the offending
/// tuple; elements inside it are 0-based, the message renders them 1-based.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<std::size_t> witness = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> witness_;
};

/// Text-format failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// "(a, b, c)" with every entry shifted to the 1-based convention.
std::string format_elements(const std::vector<std::size_t>& zero_based);

}  // namespace qhom
