#include "tpb/error.hpp"

namespace tpb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPrime: return "InvalidPrime";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UndefinedGcd: return "UndefinedGcd";
    case ErrorCode::UndefinedInput: return "UndefinedInput";
    case ErrorCode::UndefinedResultant: return "UndefinedResultant";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BranchLociCoincide: return "BranchLociCoincide";
    case ErrorCode::InadmissibleAuxiliaryPrime: return "InadmissibleAuxiliaryPrime";
    case ErrorCode::SingularReduction: return "SingularReduction";
    case ErrorCode::NotOrdinary: return "NotOrdinary";
    case ErrorCode::NotLarge: return "NotLarge";
    case ErrorCode::HypothesesNotVerified: return "HypothesesNotVerified";
    case ErrorCode::SpecError: return "SpecError";
    case ErrorCode::SoundnessAlarm: return "SoundnessAlarm";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace tpb
