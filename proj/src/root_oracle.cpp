#include "zerobound/root_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "zerobound/error.hpp"

namespace zerobound {

namespace {

constexpr int kMaxIterations = 2000;

std::vector<Complex> InitialGuesses(const Polynomial& p) {
  const std::size_t n = p.degree();
  const double radius = 0.9 * (1.0 + p.max_abs_coefficient());
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    z[k] = std::polar(radius, angle + 0.4);
  }
  return z;
}

Complex Derivative(const Polynomial& p, Complex z) {
  const std::vector<Complex> desc = p.descending();
  const std::size_t n = p.degree();
  Complex d = 0.0;
  for (std::size_t i = 0; i < n; ++i) d = d * z + static_cast<double>(n - i) * desc[i];
  return d;
}

// Coincident iterates would divide by zero; nudge the difference instead.
Complex SafeDifference(Complex a, Complex b, double scale) {
  const Complex d = a - b;
  return d == Complex{} ? Complex(1e-14 * scale, 1e-14 * scale) : d;
}

bool DurandKerner(const Polynomial& p, std::vector<Complex>& z, double tol, double scale) {
  std::vector<Complex> next(z.size());
  for (int it = 0; it < kMaxIterations; ++it) {
    double max_step = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      Complex denom = 1.0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != k) denom *= SafeDifference(z[k], z[j], scale);
      }
      const Complex step = p.evaluate(z[k]) / denom;
      next[k] = z[k] - step;
      max_step = std::max(max_step, std::abs(step));
    }
    z.swap(next);
    if (!std::isfinite(max_step)) return false;
    if (max_step <= tol) return true;
  }
  return false;
}

bool Aberth(const Polynomial& p, std::vector<Complex>& z, double tol, double scale) {
  for (int it = 0; it < kMaxIterations; ++it) {
    double max_step = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      const Complex value = p.evaluate(z[k]);
      if (value == Complex{}) continue;
      const Complex ratio = value / Derivative(p, z[k]);
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != k) repulsion += 1.0 / SafeDifference(z[k], z[j], scale);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (!std::isfinite(max_step)) return false;
    if (max_step <= tol) return true;
  }
  return false;
}

RootSet Finish(const Polynomial& p, std::vector<Complex> z) {
  std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
    const double ma = std::abs(a);
    const double mb = std::abs(b);
    if (ma != mb) return ma > mb;
    return std::arg(a) < std::arg(b);
  });
  RootSet out;
  out.roots = std::move(z);
  out.residuals.reserve(out.roots.size());
  for (const Complex& r : out.roots) out.residuals.push_back(std::abs(p.evaluate(r)));
  out.max_modulus = std::abs(out.roots.front());
  return out;
}

bool ResidualsAcceptable(const RootSet& s) {
  double scale = 1.0;
  for (const Complex& r : s.roots) scale *= 1.0 + std::abs(r);
  const double tol = 1e-8 * scale;
  return std::all_of(s.residuals.begin(), s.residuals.end(),
                     [tol](double r) { return std::isfinite(r) && r <= tol; });
}

}  // namespace

RootSet find_roots(const Polynomial& p) {
  if (p.degree() == 1) return Finish(p, {-p.a(1)});

  const double scale = 1.0 + p.max_abs_coefficient();
  const double tol = 1e-13 * scale;

  std::vector<Complex> z = InitialGuesses(p);
  if (!DurandKerner(p, z, tol, scale)) {
    std::vector<Complex> restart = InitialGuesses(p);
    Aberth(p, restart, tol, scale);
    RootSet a = Finish(p, restart);
    if (ResidualsAcceptable(a)) return a;
  }
  RootSet out = Finish(p, z);
  if (!ResidualsAcceptable(out)) {
    double worst = 0.0;
    for (double r : out.residuals) worst = std::max(worst, r);
    throw Error(ErrorCode::kNoConvergence,
                "root finder residual " + std::to_string(worst) + " exceeds tolerance");
  }
  return out;
}

Verdict validate_bound(const RootSet& roots, const BoundResult& b) {
  const double margin = b.value - roots.max_modulus;
  return {margin >= -kVerdictTolerance, margin};
}

Verdict validate_bound(const Polynomial& p, const BoundResult& b) {
  return validate_bound(find_roots(p), b);
}

Verdict validate_rectangle(const RootSet& roots, const Rectangle& r) {
  double margin = std::numeric_limits<double>::infinity();
  for (const Complex& z : roots.roots) {
    margin = std::min({margin, z.real() - r.re_lo, r.re_hi - z.real(), z.imag() - r.im_lo,
                       r.im_hi - z.imag()});
  }
  return {margin >= -kVerdictTolerance, margin};
}

Verdict validate_rectangle(const Polynomial& p, const Rectangle& r) {
  return validate_rectangle(find_roots(p), r);
}

}  // namespace zerobound
