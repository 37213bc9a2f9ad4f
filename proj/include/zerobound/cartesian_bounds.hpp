#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zerobound/bound_result.hpp"
#include "zerobound/companion.hpp"
#include "zerobound/matrix.hpp"
#include "zerobound/polynomial.hpp"

namespace zerobound {

// Axis-aligned region [re_lo, re_hi] x [im_lo, im_hi] of the complex plane.
struct Rectangle {
  double re_lo = 0.0;
  double re_hi = 0.0;
  double im_lo = 0.0;
  double im_hi = 0.0;

  static Rectangle Centered(double half_width, double half_height) {
    return {-half_width, half_width, -half_height, half_height};
  }

  bool contains(Complex z, double tol = 0.0) const;
  // True when `inner` fits inside this rectangle with every edge allowed to
  // overshoot by tol.
  bool contains(const Rectangle& inner, double tol = 0.0) const;
};

enum class MwStatus { kGuaranteed, kHeuristic, kRefused };

std::string_view to_string(MwStatus s);

struct MwApplicability {
  MwStatus status = MwStatus::kHeuristic;
  std::vector<std::string> reasons;
};

// m x m grid of square blocks of one common size, stored row-major.
struct BlockGrid {
  std::size_t m = 0;
  std::vector<ComplexMatrix> blocks;

  const ComplexMatrix& at(std::size_t k, std::size_t j) const { return blocks[k * m + j]; }
  ComplexMatrix assemble() const;
};

// (1/2)(wA + wD + sqrt((wA - wD)^2 + (nB + nC)^2)). Throws NegativeInput.
double lemma2_scalar(double w_a, double w_d, double n_b, double n_c);
// Same shape with w(B + C) + w(B - C) as the coupling term.
double lemma5_scalar(double w_a, double w_d, double w_b_plus_c, double w_b_minus_c);

// Numerical-radius bound for a block matrix with f(t) = t^s, g(t) = t^{1-s}:
//   c_kk = m w(P_kk^2 + Q_kk^2)
//   c_kj = (m/4) || |P_kj|^{2s} + |P_kj|^{2(1-s)} + |Q_kj|^{2s} + |Q_kj|^{2(1-s)} ||^2
// and the result is sqrt(w([c_kj])). P_kj, Q_kj are the Cartesian parts of
// each block. Throws BlockShapeMismatch or ExponentOutOfRange (s not in (0,1)).
double theorem1_block_bound(const BlockGrid& blocks, double s = 0.5);

// The same bound with the real and imaginary parts supplied directly, as
// when they are blocks of the Cartesian parts of the assembled matrix.
double theorem1_block_bound(const BlockGrid& p, const BlockGrid& q, double s = 0.5);
double theorem1_block_bound(const BlockCompanion& bc, double s = 0.5);

// sqrt(w1 + w2 + sqrt((w1 - w2)^2 + N^2)) with w_k = lambda_max(P_kk^2 + Q_kk^2)
// and N = || |P12| + |Q12| || + || |P21| + |Q21| ||.
BoundResult corollary1_bound(const BlockCompanion& bc);

// max(w(P11^2 + Q11^2), w(P22^2 + Q22^2)) for the Cartesian parts of A11 and
// A22, returned without a square root. Throws NonSquare.
double corollary2_bound(const ComplexMatrix& a11, const ComplexMatrix& a22);

// [-c, c] x [-d, d] with
//   c = (1/2)(|Re a_n| + cos(pi/n) + sqrt((|Re a_n| - cos(pi/n))^2 + R))
//   R = |a_{n-1} - 1|^2 + sum_{k=1}^{n-2} |a_k|^2
// and d the same with Im a_n. Throws DegreeTooSmall (n < 3).
Rectangle kittaneh_rectangle(const Polynomial& p);

// [-s, s] x [-t, t] for even degree 2n >= 4, built from F, G, H, J.
// Throws OddDegree or DegreeTooSmall.
Rectangle theorem3_rectangle(const Polynomial& q);

// (1/2)(L + cos(pi/(n+1)) + sqrt((L - cos(pi/(n+1)))^2 + (D1 + D2)^2)) for
// even degree 2n >= 4. Throws OddDegree or DegreeTooSmall.
BoundResult theorem4_bound(const Polynomial& q);

// Specialisation of theorem4_bound when a_2 = ... = a_n = 0 and a_1 = sign.
// The premise is checked exactly; otherwise HypothesisViolated.
BoundResult corollary3_bound(const Polynomial& q, int sign);

// (1/2)(sqrt(S) + sqrt(S + (|c_1| + 1)^2)), S = sum_{k=2}^n |c_k|^2, where
// the c_k are the coefficients of g. The value is always computed; the
// guard decides whether it is guaranteed, heuristic, or (under strict)
// refused. Throws DegreeTooSmall (n < 2).
std::pair<BoundResult, MwApplicability> mw_bound(const Polynomial& g, bool strict = false);

// [lambda_min(Re C), lambda_max(Re C)] x [lambda_min(Im C), lambda_max(Im C)]
// for the companion matrix C. Throws DegreeTooSmall (n < 2).
Rectangle hermitian_rectangle(const Polynomial& p);

}  // namespace zerobound
