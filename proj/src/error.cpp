#include "zerobound/error.hpp"

namespace zerobound {

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonSquare: return "NonSquare";
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNegativeEntry: return "NegativeEntry";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kInternalConsistency: return "InternalConsistency";
    case ErrorCode::kZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorCode::kDegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::kOddDegree: return "OddDegree";
    case ErrorCode::kNegativeRadicand: return "NegativeRadicand";
    case ErrorCode::kNegativeInput: return "NegativeInput";
    case ErrorCode::kBlockShapeMismatch: return "BlockShapeMismatch";
    case ErrorCode::kExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownFixture: return "UnknownFixture";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace zerobound
