#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace zerobound {

enum class Applicability { kValid, kConditional, kRefused };

std::string_view to_string(Applicability a);

// One disk bound: every zero z satisfies |z| <= value unless refused.
struct BoundResult {
  std::string method;
  double value = 0.0;
  std::optional<std::string> variant;
  Applicability applicability = Applicability::kValid;
  std::string notes;

  bool usable() const { return applicability != Applicability::kRefused; }
};

}  // namespace zerobound
