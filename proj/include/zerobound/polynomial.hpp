#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zerobound/matrix.hpp"

namespace zerobound {

// Monic polynomial z^n + a_n z^{n-1} + ... + a_2 z + a_1.
//
// Coefficients are stored in ascending order and addressed 1-based, so a(k)
// multiplies z^{k-1} and a(n) is the coefficient just below the leading term.
// Every bound formula in this library is written against this indexing.
class Polynomial {
 public:
  // `lower` holds a_1..a_n. Throws DegreeTooSmall when empty and NonFinite
  // for NaN/Inf coefficients.
  explicit Polynomial(std::vector<Complex> lower);

  std::size_t degree() const noexcept { return lower_.size(); }
  const Complex& a(std::size_t k) const;
  std::span<const Complex> lower() const noexcept { return lower_; }

  Complex evaluate(Complex z) const;
  // Sum of |coefficient| |z|^k including the leading 1; the natural scale
  // for judging a residual |p(z)|.
  double evaluation_scale(Complex z) const;
  // Coefficients in descending order, leading 1 first.
  std::vector<Complex> descending() const;

  double max_abs_coefficient() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Complex> lower_;
};

// Divides the descending coefficient list by its leading entry.
// Throws ZeroLeadingCoefficient or DegreeTooSmall (fewer than two entries).
Polynomial make_monic(std::span<const Complex> coeffs_desc);

// p(z) = z p1(z) when the degree is odd and a_1 is exactly zero; the flag
// reports whether the factor was removed.
std::pair<Polynomial, bool> odd_reduce(const Polynomial& p);

// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` where each numeric part is a
// decimal or a fraction p/q. Throws ParseError naming the token.
Complex parse_complex(std::string_view token);

// Comma-separated descending coefficients, e.g. "1, 5/4, 4/3, 1, 2, 3, 4".
Polynomial parse_polynomial(std::string_view text);

std::string to_string(const Polynomial& p);

// Zeros computed by the root oracle.
struct RootSet {
  std::vector<Complex> roots;
  std::vector<double> residuals;
  double max_modulus = 0.0;
};

}  // namespace zerobound
