#pragma once

#include <cstddef>

#include "zerobound/matrix.hpp"
#include "zerobound/polynomial.hpp"

namespace zerobound {

// Frobenius companion matrix: first row (-a_n, ..., -a_1), ones on the
// subdiagonal. Throws DegreeTooSmall below degree 2.
ComplexMatrix build_companion(const Polynomial& p);

// C(q) of an even-degree polynomial split into four n x n blocks, together
// with the matching blocks of Re C(q) = (C + C*)/2 and Im C(q) = (C - C*)/2i.
//
// P_kj and Q_kj are blocks of the global real and imaginary parts, so
// A_kj = P_kj + i Q_kj holds blockwise. The diagonal P/Q blocks are
// Hermitian; the off-diagonal ones satisfy P_21 = P_12* and Q_21 = Q_12*.
struct BlockCompanion {
  std::size_t n = 0;
  ComplexMatrix a11, a12, a21, a22;
  ComplexMatrix p11, p12, p21, p22;
  ComplexMatrix q11, q12, q21, q22;
  // a_1 == 0 falls outside the construction's standing hypothesis. The
  // formulas still evaluate, so this is reported rather than thrown.
  bool zero_constant_term = false;

  ComplexMatrix assemble_a() const;
  ComplexMatrix assemble_p() const;
  ComplexMatrix assemble_q() const;
};

// Throws OddDegree or DegreeTooSmall (degree < 4). The per-block real and
// imaginary parts are written out entry by entry and cross-checked against
// the global (C +- C*) parts; a mismatch is an InternalConsistency error.
BlockCompanion build_block_companion(const Polynomial& q);

// Closed-form characteristic polynomial of Re C(p), evaluated at z:
//   (z + Re a_n) prod_j (z - cos(j pi/n)) - sum_j |v_j|^2 prod_{k!=j} (z - cos(k pi/n))
// with j, k in 1..n-1. Throws DegreeTooSmall below degree 3.
Complex real_part_charpoly(const Polynomial& p, Complex z);

}  // namespace zerobound
