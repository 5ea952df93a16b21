#include "axiskit/error.hpp"

namespace axiskit {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::LabelCountError: return "LabelCountError";
    case ErrorCode::NotFourValent: return "NotFourValent";
    case ErrorCode::SplitProjection: return "SplitProjection";
    case ErrorCode::EulerViolation: return "EulerViolation";
    case ErrorCode::PairingNotInvolution: return "PairingNotInvolution";
    case ErrorCode::TooFewCrossings: return "TooFewCrossings";
    case ErrorCode::NoCrossings: return "NoCrossings";
    case ErrorCode::UnknownLetter: return "UnknownLetter";
    case ErrorCode::ParityClosure: return "ParityClosure";
    case ErrorCode::DummyPresent: return "DummyPresent";
    case ErrorCode::GluingInconsistent: return "GluingInconsistent";
    case ErrorCode::NonSpherical: return "NonSpherical";
    case ErrorCode::NotSimpleAxis: return "NotSimpleAxis";
    case ErrorCode::NotKnotProjection: return "NotKnotProjection";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedRecord:
    case ErrorCode::LabelCountError:
    case ErrorCode::NotFourValent:
    case ErrorCode::SplitProjection:
    case ErrorCode::EulerViolation:
    case ErrorCode::PairingNotInvolution:
    case ErrorCode::UnknownLetter:
      return 1;
    case ErrorCode::InvariantViolation:
    case ErrorCode::ParityClosure:
      return 3;
    default:
      return 2;
  }
}

Error::Error(ErrorCode code, const std::string& what, int line)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), line_(line) {}

}  // namespace axiskit
