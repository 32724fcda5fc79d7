#pragma once

#include <stdexcept>
#include <string>

namespace mcs {

enum class ErrorCode {
  SelfLoop,
  DuplicateEdge,
  Disconnected,
  EmptyGraph,
  EmptySet,
  BudgetExceeded,
  FamilyTooLarge,
  UniverseTooLarge,
  Infeasible,
  TooLarge,
  ParameterTooLarge,
  NoFeasibleGuess,
  NotConsistent,
  SyntaxError,
  CountMismatch,
  InvalidParams,
  RetriesExhausted,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mcs
