#pragma once

#include <vector>

#include "zerobound/bound_result.hpp"
#include "zerobound/polynomial.hpp"

namespace zerobound {

// Disk bounds on the zeros of a monic polynomial that predate the block
// Cartesian approach. Each follows the formula exactly as it appears in the
// comparison tables; where the tables were produced by a different formula
// the variant flag selects between the two.

enum class LindenVariant { kPrinted, kTable };
enum class KittanehVariant { kPrinted, kPlusOne };

BoundResult cauchy(const Polynomial& p);
BoundResult carmichael_mason(const Polynomial& p);
BoundResult montel(const Polynomial& p);
BoundResult fujii_kubo(const Polynomial& p);
BoundResult abdurakhmanov(const Polynomial& p);

// printed: |a_n|/n + sqrt((n-1)/n (n - 1 + sum|a_k|^2 - |a_n|^2/n)).
// table:   the same with |a_n|/n in place of |a_n|^2/n.
// Throws DegreeTooSmall (n < 2) or NegativeRadicand.
BoundResult linden(const Polynomial& p, LindenVariant variant = LindenVariant::kPrinted);

// printed uses (|a_{n-1}| - 1)^2 in the radicand, plus_one uses
// (1 + |a_{n-1}|)^2. Throws DegreeTooSmall (n < 3).
BoundResult kittaneh_disk(const Polynomial& p,
                          KittanehVariant variant = KittanehVariant::kPrinted);

BoundResult abu_omar_kittaneh(const Polynomial& p);

// Minimum over t in [0, 1] of the one-parameter family; the minimiser is
// reported in `notes` as "t*=...". Throws DegreeTooSmall (n < 2).
BoundResult al_dolat(const Polynomial& p);

// Objective of al_dolat at a fixed t, exposed for testing the minimiser.
double al_dolat_objective(const Polynomial& p, double t);

// Every classical method, both variants where there are two. Methods whose
// degree precondition fails are omitted.
std::vector<BoundResult> all_classical_bounds(const Polynomial& p);

}  // namespace zerobound
