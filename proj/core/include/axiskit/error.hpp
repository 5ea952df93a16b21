#pragma once

#include <stdexcept>
#include <string>

namespace axiskit {

enum class ErrorCode {
  MalformedRecord,
  LabelCountError,
  NotFourValent,
  SplitProjection,
  EulerViolation,
  PairingNotInvolution,
  TooFewCrossings,
  NoCrossings,
  UnknownLetter,
  ParityClosure,
  DummyPresent,
  GluingInconsistent,
  NonSpherical,
  NotSimpleAxis,
  NotKnotProjection,
  InvariantViolation,
};

const char* to_string(ErrorCode code);

// Validation failures exit with 1, unmet preconditions with 2 and broken
// internal invariants with 3.
int exit_code_for(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, int line = 0);

  ErrorCode code() const noexcept { return code_; }
  // 1-based input line the error was detected on, 0 if not applicable.
  int line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

}  // namespace axiskit
