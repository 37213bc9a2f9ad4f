#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zerobound {

enum class ErrorCode {
  kNonSquare,
  kNotHermitian,
  kNonFinite,
  kShapeMismatch,
  kNegativeEntry,
  kNoConvergence,
  kInternalConsistency,
  kZeroLeadingCoefficient,
  kDegreeTooSmall,
  kOddDegree,
  kNegativeRadicand,
  kNegativeInput,
  kBlockShapeMismatch,
  kExponentOutOfRange,
  kHypothesisViolated,
  kParseError,
  kUnknownFixture,
  kInvalidArgument,
};

std::string_view ToString(ErrorCode code);

// Every failure in the library surfaces as this exception; callers branch on
// code() rather than on the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ToString(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zerobound
