#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tpb {

enum class ErrorCode {
  InvalidPrime,
  InvalidArgument,
  UndefinedGcd,
  UndefinedInput,
  UndefinedResultant,
  RingMismatch,
  SingularCurve,
  UnsupportedPrime,
  PointNotOnCurve,
  PreconditionViolated,
  BranchLociCoincide,
  InadmissibleAuxiliaryPrime,
  SingularReduction,
  NotOrdinary,
  NotLarge,
  HypothesesNotVerified,
  SpecError,
  SoundnessAlarm,
  Internal,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; the code carries the contract-level
// failure kind, the message carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace tpb
