#include "zerobound/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zerobound/error.hpp"

namespace zerobound {

namespace {

void RequireSize(const TriToeplitz& t) {
  if (t.n < 2) throw Error(ErrorCode::kInvalidArgument, "tri(b, a, c) needs n >= 2");
}

Complex Eigenvalue(const TriToeplitz& t, std::size_t k) {
  const double radius = std::sqrt(std::abs(t.b * t.c));
  const Complex phase =
      radius == 0.0 ? Complex(1.0) : std::polar(1.0, 0.5 * (std::arg(t.b) + std::arg(t.c)));
  const double angle = std::numbers::pi * static_cast<double>(k) / static_cast<double>(t.n + 1);
  return t.a + 2.0 * radius * phase * std::cos(angle);
}

}  // namespace

ComplexMatrix TriToeplitz::assemble() const {
  RequireSize(*this);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = a;
    if (i + 1 < n) {
      m(i + 1, i) = b;
      m(i, i + 1) = c;
    }
  }
  return m;
}

std::vector<Complex> toeplitz_eigenvalues(const TriToeplitz& t) {
  RequireSize(t);
  std::vector<Complex> out(t.n);
  for (std::size_t k = 1; k <= t.n; ++k) out[k - 1] = Eigenvalue(t, k);
  return out;
}

double toeplitz_spectral_radius(const TriToeplitz& t) {
  RequireSize(t);
  return std::max(std::abs(Eigenvalue(t, 1)), std::abs(Eigenvalue(t, t.n)));
}

bool is_normal(const TriToeplitz& t) {
  return std::abs(std::abs(t.b) - std::abs(t.c)) <= 1e-12;
}

}  // namespace zerobound
