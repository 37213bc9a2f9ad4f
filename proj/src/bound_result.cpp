#include "zerobound/bound_result.hpp"

namespace zerobound {

std::string_view to_string(Applicability a) {
  switch (a) {
    case Applicability::kValid: return "valid";
    case Applicability::kConditional: return "conditional";
    case Applicability::kRefused: return "refused";
  }
  return "unknown";
}

}  // namespace zerobound
