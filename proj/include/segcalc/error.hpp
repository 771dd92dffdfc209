#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace segcalc {

enum class ErrorCode {
  NonPrimeEll,
  QDivisibleByEll,
  InvalidContext,
  UnknownLine,
  InvalidLine,
  InfiniteOrder,
  MissingDualLine,
  BadResidue,
  DifferentLines,
  PreconditionViolated,
  NotAperiodic,
  LengthMismatch,
  ModularContext,
  RequiresModular,
  MissingPeriodicPair,
  SupportMismatch,
  NotNilpotent,
  DimensionMismatch,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeEll: return "NonPrimeEll";
    case ErrorCode::QDivisibleByEll: return "QDivisibleByEll";
    case ErrorCode::InvalidContext: return "InvalidContext";
    case ErrorCode::UnknownLine: return "UnknownLine";
    case ErrorCode::InvalidLine: return "InvalidLine";
    case ErrorCode::InfiniteOrder: return "InfiniteOrder";
    case ErrorCode::MissingDualLine: return "MissingDualLine";
    case ErrorCode::BadResidue: return "BadResidue";
    case ErrorCode::DifferentLines: return "DifferentLines";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotAperiodic: return "NotAperiodic";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ModularContext: return "ModularContext";
    case ErrorCode::RequiresModular: return "RequiresModular";
    case ErrorCode::MissingPeriodicPair: return "MissingPeriodicPair";
    case ErrorCode::SupportMismatch: return "SupportMismatch";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error in the multisegment or word grammar; column is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t column, const std::string& what)
      : Error(ErrorCode::ParseError, "column " + std::to_string(column) + ": " + what),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace segcalc
