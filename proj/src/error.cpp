#include "hamfix/error.hpp"

namespace hamfix {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::StructureError: return "StructureError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::MissingRestriction: return "MissingRestriction";
    case ErrorKind::NonConstantC1: return "NonConstantC1";
    case ErrorKind::NonPositiveC1: return "NonPositiveC1";
    case ErrorKind::ConditionDViolated: return "ConditionDViolated";
    case ErrorKind::DegenerateGamma: return "DegenerateGamma";
    case ErrorKind::CrossCheckFailed: return "CrossCheckFailed";
    case ErrorKind::DuplicateB: return "DuplicateB";
    case ErrorKind::EvenN: return "EvenN";
    case ErrorKind::ZeroB: return "ZeroB";
    case ErrorKind::DuplicateAbsB: return "DuplicateAbsB";
    case ErrorKind::NonIncreasing: return "NonIncreasing";
    case ErrorKind::OddHalfWeight: return "OddHalfWeight";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::InconsistentGamma: return "InconsistentGamma";
    case ErrorKind::NoPositiveScale: return "NoPositiveScale";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace hamfix
