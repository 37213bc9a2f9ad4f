#include "zerobound/companion.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zerobound/error.hpp"

namespace zerobound {

namespace {

constexpr Complex kHalf{0.5, 0.0};
// Multiplying by -i/2 divides by 2i exactly.
constexpr Complex kOverTwoI{0.0, -0.5};

void RequireConsistent(const ComplexMatrix& displayed, const ComplexMatrix& global,
                       const char* name) {
  const double tol = 1e-14 * (1.0 + max_abs(global));
  for (std::size_t r = 0; r < global.rows(); ++r) {
    for (std::size_t c = 0; c < global.cols(); ++c) {
      if (std::abs(displayed(r, c) - global(r, c)) > tol) {
        throw Error(ErrorCode::kInternalConsistency,
                    std::string("block ") + name + " disagrees with the global Cartesian part at (" +
                        std::to_string(r) + ", " + std::to_string(c) + ")");
      }
    }
  }
}

}  // namespace

ComplexMatrix build_companion(const Polynomial& p) {
  const std::size_t n = p.degree();
  if (n < 2) {
    throw Error(ErrorCode::kDegreeTooSmall, "companion matrix needs degree >= 2");
  }
  ComplexMatrix c(n, n);
  for (std::size_t j = 0; j < n; ++j) c(0, j) = -p.a(n - j);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  return c;
}

ComplexMatrix BlockCompanion::assemble_a() const {
  ComplexMatrix out(2 * n, 2 * n);
  out.set_block(0, 0, a11);
  out.set_block(0, n, a12);
  out.set_block(n, 0, a21);
  out.set_block(n, n, a22);
  return out;
}

ComplexMatrix BlockCompanion::assemble_p() const {
  ComplexMatrix out(2 * n, 2 * n);
  out.set_block(0, 0, p11);
  out.set_block(0, n, p12);
  out.set_block(n, 0, p21);
  out.set_block(n, n, p22);
  return out;
}

ComplexMatrix BlockCompanion::assemble_q() const {
  ComplexMatrix out(2 * n, 2 * n);
  out.set_block(0, 0, q11);
  out.set_block(0, n, q12);
  out.set_block(n, 0, q21);
  out.set_block(n, n, q22);
  return out;
}

BlockCompanion build_block_companion(const Polynomial& q) {
  const std::size_t degree = q.degree();
  if (degree % 2 != 0) {
    throw Error(ErrorCode::kOddDegree,
                "block partition needs even degree, got " + std::to_string(degree));
  }
  if (degree < 4) {
    throw Error(ErrorCode::kDegreeTooSmall, "block partition needs degree >= 4");
  }
  const std::size_t n = degree / 2;
  auto a = [&q](std::size_t k) { return q.a(k); };

  BlockCompanion bc;
  bc.n = n;
  bc.zero_constant_term = a(1) == Complex{};
  for (ComplexMatrix* m : {&bc.a11, &bc.a12, &bc.a21, &bc.a22, &bc.p11, &bc.p12, &bc.p21,
                           &bc.p22, &bc.q11, &bc.q12, &bc.q21, &bc.q22}) {
    *m = ComplexMatrix(n, n);
  }

  for (std::size_t j = 0; j < n; ++j) {
    bc.a11(0, j) = -a(2 * n - j);
    bc.a12(0, j) = -a(n - j);
  }
  for (std::size_t i = 1; i < n; ++i) {
    bc.a11(i, i - 1) = 1.0;
    bc.a22(i, i - 1) = 1.0;
  }
  bc.a21(0, n - 1) = 1.0;

  // Real part, block by block.
  bc.p11(0, 0) = -a(2 * n).real();
  for (std::size_t j = 1; j < n; ++j) {
    const Complex shift = j == 1 ? 1.0 : 0.0;
    bc.p11(0, j) = kHalf * (-a(2 * n - j) + shift);
    bc.p11(j, 0) = kHalf * (-std::conj(a(2 * n - j)) + shift);
  }
  for (std::size_t i = 2; i < n; ++i) {
    bc.p11(i, i - 1) = kHalf;
    bc.p11(i - 1, i) = kHalf;
  }
  for (std::size_t j = 0; j < n; ++j) {
    bc.p12(0, j) = kHalf * -a(n - j);
    bc.p21(j, 0) = kHalf * -std::conj(a(n - j));
  }
  bc.p12(n - 1, 0) += kHalf;
  bc.p21(0, n - 1) += kHalf;
  for (std::size_t i = 1; i < n; ++i) {
    bc.p22(i, i - 1) = kHalf;
    bc.p22(i - 1, i) = kHalf;
  }

  // Imaginary part, block by block.
  bc.q11(0, 0) = -a(2 * n).imag();
  for (std::size_t j = 1; j < n; ++j) {
    const Complex shift = j == 1 ? 1.0 : 0.0;
    bc.q11(0, j) = kOverTwoI * (-a(2 * n - j) - shift);
    bc.q11(j, 0) = kOverTwoI * (std::conj(a(2 * n - j)) + shift);
  }
  for (std::size_t i = 2; i < n; ++i) {
    bc.q11(i, i - 1) = kOverTwoI;
    bc.q11(i - 1, i) = -kOverTwoI;
  }
  for (std::size_t j = 0; j < n; ++j) {
    bc.q12(0, j) = kOverTwoI * -a(n - j);
    bc.q21(j, 0) = kOverTwoI * std::conj(a(n - j));
  }
  bc.q12(n - 1, 0) += -kOverTwoI;
  bc.q21(0, n - 1) += kOverTwoI;
  for (std::size_t i = 1; i < n; ++i) {
    bc.q22(i, i - 1) = kOverTwoI;
    bc.q22(i - 1, i) = -kOverTwoI;
  }

  const ComplexMatrix c = build_companion(q);
  const ComplexMatrix re = hermitian_part(c);
  const ComplexMatrix im = skew_hermitian_part(c);
  RequireConsistent(bc.assemble_a(), c, "A");
  RequireConsistent(bc.assemble_p(), re, "P");
  RequireConsistent(bc.assemble_q(), im, "Q");
  return bc;
}

Complex real_part_charpoly(const Polynomial& p, Complex z) {
  const std::size_t n = p.degree();
  if (n < 3) {
    throw Error(ErrorCode::kDegreeTooSmall, "real_part_charpoly needs degree >= 3");
  }
  const double pi = std::numbers::pi;
  const double dn = static_cast<double>(n);

  std::vector<Complex> factors(n);  // factors[j] = z - cos(j pi / n), j = 1..n-1
  for (std::size_t j = 1; j < n; ++j) factors[j] = z - std::cos(pi * j / dn);

  Complex result = z + p.a(n).real();
  for (std::size_t j = 1; j < n; ++j) result *= factors[j];

  const double norm = 1.0 / std::sqrt(2.0 * dn);
  for (std::size_t j = 1; j < n; ++j) {
    Complex v = (1.0 - std::conj(p.a(n - 1))) * std::sin(pi * j / dn);
    for (std::size_t k = 2; k < n; ++k) {
      v -= std::conj(p.a(n - k)) * std::sin(pi * static_cast<double>(k * j) / dn);
    }
    Complex others = std::norm(norm * v);
    for (std::size_t k = 1; k < n; ++k) {
      if (k != j) others *= factors[k];
    }
    result -= others;
  }
  return result;
}

}  // namespace zerobound
