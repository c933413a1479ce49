#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hamfix {

enum class ErrorKind {
  StructureError,
  IndexOutOfRange,
  InvalidInput,
  MissingRestriction,
  NonConstantC1,
  NonPositiveC1,
  ConditionDViolated,
  DegenerateGamma,
  CrossCheckFailed,
  DuplicateB,
  EvenN,
  ZeroB,
  DuplicateAbsB,
  NonIncreasing,
  OddHalfWeight,
  SpecMismatch,
  SearchBudgetExceeded,
  InconsistentGamma,
  NoPositiveScale,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this one exception type; callers
// dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hamfix
