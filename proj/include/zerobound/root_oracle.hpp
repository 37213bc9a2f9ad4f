#pragma once

#include "zerobound/bound_result.hpp"
#include "zerobound/cartesian_bounds.hpp"
#include "zerobound/polynomial.hpp"

namespace zerobound {

// All zeros of p by Durand-Kerner iteration, restarted once with
// Aberth-Ehrlich corrections if it stalls. Roots are sorted by modulus
// descending, then argument ascending. Throws NoConvergence when some
// |p(z)| exceeds 1e-8 prod_j (1 + |z_j|).
RootSet find_roots(const Polynomial& p);

struct Verdict {
  bool holds = false;
  // Slack of the tightest root: value - max modulus for a disk, the smallest
  // distance to an edge for a rectangle. Negative when violated.
  double margin = 0.0;
};

inline constexpr double kVerdictTolerance = 1e-9;

Verdict validate_bound(const RootSet& roots, const BoundResult& b);
Verdict validate_bound(const Polynomial& p, const BoundResult& b);
Verdict validate_rectangle(const RootSet& roots, const Rectangle& r);
Verdict validate_rectangle(const Polynomial& p, const Rectangle& r);

}  // namespace zerobound
