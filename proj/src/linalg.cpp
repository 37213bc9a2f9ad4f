#include "zerobound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "zerobound/error.hpp"

namespace zerobound {

namespace {

void RequireSquare(const ComplexMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw Error(ErrorCode::kNonSquare,
                std::string(what) + " needs a square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

double OffDiagonalNorm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (r != c) sum += std::norm(a(r, c));
    }
  }
  return std::sqrt(sum);
}

// Zeroes a(p, q) with the unitary U = Phi R, where Phi rotates the phase of
// a(p, q) away and R is the classical real Jacobi rotation.
void Rotate(ComplexMatrix& a, ComplexMatrix* v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double magnitude = std::abs(apq);
  if (magnitude == 0.0) return;
  const Complex phase = apq / magnitude;
  const Complex phase_conj = std::conj(phase);

  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * magnitude);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double app = a(p, p).real() - t * magnitude;
  const double aqq = a(q, q).real() + t * magnitude;

  const std::size_t n = a.rows();
  for (std::size_t r = 0; r < n; ++r) {
    const Complex x = a(r, p);
    const Complex y = a(r, q);
    a(r, p) = c * x - s * phase_conj * y;
    a(r, q) = s * x + c * phase_conj * y;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex x = a(p, k);
    const Complex y = a(q, k);
    a(p, k) = c * x - s * phase * y;
    a(q, k) = s * x + c * phase * y;
  }
  if (v != nullptr) {
    for (std::size_t r = 0; r < n; ++r) {
      const Complex x = (*v)(r, p);
      const Complex y = (*v)(r, q);
      (*v)(r, p) = c * x - s * phase_conj * y;
      (*v)(r, q) = s * x + c * phase_conj * y;
    }
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app;
  a(q, q) = aqq;
}

// Diagonalises a copy of `input` in place; accumulates the eigenvectors into
// *v when v is non-null.
ComplexMatrix JacobiDiagonalise(const ComplexMatrix& input, ComplexMatrix* v,
                                const JacobiOptions& options) {
  RequireSquare(input, "hermitian_eigs");
  const double scale = max_abs(input);
  double asymmetry = 0.0;
  for (std::size_t r = 0; r < input.rows(); ++r) {
    for (std::size_t c = r; c < input.cols(); ++c) {
      asymmetry = std::max(asymmetry, std::abs(input(r, c) - std::conj(input(c, r))));
    }
  }
  if (asymmetry > 1e-12 * (1.0 + scale)) {
    throw Error(ErrorCode::kNotHermitian,
                "max |A - A*| entry is " + std::to_string(asymmetry));
  }

  const std::size_t n = input.rows();
  ComplexMatrix a = hermitian_part(input);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  if (v != nullptr) *v = ComplexMatrix::Identity(n);

  const double threshold = options.relative_tolerance * frobenius_norm(a);
  for (int sweep = 0; sweep <= options.max_sweeps; ++sweep) {
    if (OffDiagonalNorm(a) <= threshold) return a;
    if (sweep == options.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) Rotate(a, v, p, q);
    }
  }
  throw Error(ErrorCode::kNoConvergence,
              "Jacobi did not converge in " + std::to_string(options.max_sweeps) + " sweeps");
}

double HermitianMax(const ComplexMatrix& x, double theta) {
  return lambda_max(hermitian_part(std::polar(1.0, theta) * x));
}

}  // namespace

HermitianEigen hermitian_eigs(const ComplexMatrix& input, JacobiOptions options) {
  ComplexMatrix v;
  const ComplexMatrix a = JacobiDiagonalise(input, &v, options);
  const std::size_t n = a.rows();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

double lambda_max(const ComplexMatrix& hermitian) {
  if (hermitian.rows() == 0) return 0.0;
  const ComplexMatrix d = JacobiDiagonalise(hermitian, nullptr, {});
  double best = d(0, 0).real();
  for (std::size_t i = 1; i < d.rows(); ++i) best = std::max(best, d(i, i).real());
  return best;
}

ComplexMatrix hermitian_apply(const ComplexMatrix& hermitian,
                              const std::function<double(double)>& f) {
  const HermitianEigen eig = hermitian_eigs(hermitian);
  const std::size_t n = hermitian.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(eig.eigenvalues[k]);
    if (fk == 0.0) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const Complex vr = fk * eig.eigenvectors(r, k);
      for (std::size_t c = 0; c < n; ++c) {
        out(r, c) += vr * std::conj(eig.eigenvectors(c, k));
      }
    }
  }
  return out;
}

ComplexMatrix psd_abs(const ComplexMatrix& x) {
  RequireSquare(x, "psd_abs");
  const double floor = -1e-12 * std::pow(frobenius_norm(x), 2);
  return hermitian_apply(x.adjoint() * x, [floor](double lambda) {
    if (lambda < floor) {
      throw Error(ErrorCode::kInternalConsistency,
                  "X*X has eigenvalue " + std::to_string(lambda));
    }
    return std::sqrt(std::max(lambda, 0.0));
  });
}

double operator_norm(const ComplexMatrix& x) {
  if (x.rows() == 0 || x.cols() == 0) return 0.0;
  return std::sqrt(std::max(lambda_max(x.adjoint() * x), 0.0));
}

double numerical_radius_sweep(const ComplexMatrix& x, SweepOptions options) {
  RequireSquare(x, "numerical_radius_sweep");
  if (options.samples < 64) {
    throw Error(ErrorCode::kInvalidArgument, "numerical_radius_sweep needs >= 64 samples");
  }
  if (x.rows() == 0) return 0.0;

  const double step = 2.0 * std::numbers::pi / static_cast<double>(options.samples);
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_index = 0;
  for (std::size_t k = 0; k < options.samples; ++k) {
    const double value = HermitianMax(x, step * static_cast<double>(k));
    if (value > best) {
      best = value;
      best_index = k;
    }
  }

  // Golden-section maximisation on [theta* - step, theta* + step].
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = step * static_cast<double>(best_index) - step;
  double hi = lo + 2.0 * step;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = HermitianMax(x, x1);
  double f2 = HermitianMax(x, x2);
  for (int it = 0; it < options.refine_iters; ++it) {
    best = std::max({best, f1, f2});
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = HermitianMax(x, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = HermitianMax(x, x1);
    }
  }
  return std::max({best, f1, f2});
}

double nonneg_numrad(const ComplexMatrix& c) {
  RequireSquare(c, "nonneg_numrad");
  for (const Complex& z : c.entries()) {
    if (z.imag() != 0.0 || z.real() < 0.0) {
      throw Error(ErrorCode::kNegativeEntry,
                  "entry (" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) +
                      ") is not a nonnegative real");
    }
  }
  return lambda_max(0.5 * (c + c.transpose()));
}

}  // namespace zerobound
