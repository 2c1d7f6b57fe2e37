#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace minorkit {

enum class ErrorCode {
  InvalidInput,
  InvalidEdit,
  Disconnected,
  OracleTooLarge,
  DimensionMismatch,
  VertexMismatch,
  MissingWitness,
  NotATree,
  TooSmall,
  BadNesting,
  BadSnapshot,
  SequenceMismatch,
  TooLarge,
  NotFound,
  MissingGain,
  Inconsistent,
  InfeasibleSpec,
  EmptyF,
  ImproperColoring,
  BadBounds,
  BudgetExceeded,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidEdit: return "InvalidEdit";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::VertexMismatch: return "VertexMismatch";
    case ErrorCode::MissingWitness: return "MissingWitness";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::BadNesting: return "BadNesting";
    case ErrorCode::BadSnapshot: return "BadSnapshot";
    case ErrorCode::SequenceMismatch: return "SequenceMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::MissingGain: return "MissingGain";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::EmptyF: return "EmptyF";
    case ErrorCode::ImproperColoring: return "ImproperColoring";
    case ErrorCode::BadBounds: return "BadBounds";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Single exception type for the library; `code()` tells callers which
/// contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace minorkit
