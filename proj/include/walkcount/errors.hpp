#ifndef WALKCOUNT_ERRORS_HPP_
#define WALKCOUNT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace walkcount {

// Error categories; each maps to a stable CLI exit code (see README).
enum class ErrorCode {
  Generic = 1,
  Usage = 2,
  Disconnected = 10,
  SelfLoop = 11,
  ParallelEdge = 12,
  NonpositiveLength = 13,
  DuplicateLengthSymbol = 14,
  UnknownVertex = 15,
  UnknownEdge = 16,
  NotATree = 17,
  EmptyLengths = 18,
  PartitionMismatch = 19,
  LengthCountMismatch = 20,
  BasisMismatch = 21,
  HorizonTooLarge = 30,
  TAtEvent = 31,
  BeyondHorizon = 32,
  TooFewEdges = 40,
  InvalidMove = 41,
  FormulaDomain = 42,
  InsufficientData = 43,
  BudgetExceeded = 44,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }
  int exit_code() const { return static_cast<int>(code_); }

 private:
  ErrorCode code_;
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Generic: return "Generic";
    case ErrorCode::Usage: return "Usage";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::ParallelEdge: return "ParallelEdge";
    case ErrorCode::NonpositiveLength: return "NonpositiveLength";
    case ErrorCode::DuplicateLengthSymbol: return "DuplicateLengthSymbol";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::EmptyLengths: return "EmptyLengths";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::LengthCountMismatch: return "LengthCountMismatch";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::HorizonTooLarge: return "HorizonTooLarge";
    case ErrorCode::TAtEvent: return "TAtEvent";
    case ErrorCode::BeyondHorizon: return "BeyondHorizon";
    case ErrorCode::TooFewEdges: return "TooFewEdges";
    case ErrorCode::InvalidMove: return "InvalidMove";
    case ErrorCode::FormulaDomain: return "FormulaDomain";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

}  // namespace walkcount

#endif  // WALKCOUNT_ERRORS_HPP_
