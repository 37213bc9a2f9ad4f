#include "zerobound/cartesian_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "zerobound/error.hpp"
#include "zerobound/linalg.hpp"

namespace zerobound {

namespace {

constexpr double kPi = std::numbers::pi;

double SumSquares(const Polynomial& p, std::size_t lo, std::size_t hi) {
  double sum = 0.0;
  for (std::size_t k = lo; k <= hi && k <= p.degree(); ++k) sum += std::norm(p.a(k));
  return sum;
}

// (1/2)(x + y + sqrt((x - y)^2 + z^2)), the larger eigenvalue of [[x, z/2], [z/2, y]].
double TwoByTwoRoot(double x, double y, double z) {
  return 0.5 * (x + y + std::sqrt((x - y) * (x - y) + z * z));
}

void RequireEvenDegree(const Polynomial& q, const char* method) {
  if (q.degree() % 2 != 0) {
    throw Error(ErrorCode::kOddDegree,
                std::string(method) + " needs even degree, got " + std::to_string(q.degree()));
  }
  if (q.degree() < 4) {
    throw Error(ErrorCode::kDegreeTooSmall, std::string(method) + " needs degree >= 4");
  }
}

void RequireGrid(const BlockGrid& g, const char* name) {
  if (g.m == 0 || g.blocks.size() != g.m * g.m) {
    throw Error(ErrorCode::kBlockShapeMismatch,
                std::string(name) + " must hold m*m blocks with m >= 1");
  }
  const std::size_t size = g.blocks.front().rows();
  for (const ComplexMatrix& b : g.blocks) {
    if (b.rows() != size || b.cols() != size) {
      throw Error(ErrorCode::kBlockShapeMismatch,
                  std::string(name) + " blocks must be square and of one size");
    }
  }
}

// w(P^2 + Q^2); the argument is Hermitian PSD so its numerical radius is its
// largest eigenvalue.
double DiagonalTerm(const ComplexMatrix& p, const ComplexMatrix& q) {
  return lambda_max(p * p + q * q);
}

ComplexMatrix MixedPowers(const ComplexMatrix& x, double s) {
  return hermitian_apply(psd_abs(x), [s](double t) {
    const double v = std::max(t, 0.0);
    return std::pow(v, 2.0 * s) + std::pow(v, 2.0 * (1.0 - s));
  });
}

BoundResult Make(std::string method, double value) {
  BoundResult r;
  r.method = std::move(method);
  r.value = value;
  return r;
}

// L: the bound on w(A11) shared by Theorem 4, Corollary 3 and MW.
double LeadingBlockTerm(const Polynomial& q, std::size_t n) {
  const double tail = SumSquares(q, n + 2, 2 * n);
  const double pivot = std::abs(q.a(n + 1)) + 1.0;
  return 0.5 * (std::sqrt(tail) + std::sqrt(tail + pivot * pivot));
}

}  // namespace

bool Rectangle::contains(Complex z, double tol) const {
  return z.real() >= re_lo - tol && z.real() <= re_hi + tol && z.imag() >= im_lo - tol &&
         z.imag() <= im_hi + tol;
}

bool Rectangle::contains(const Rectangle& inner, double tol) const {
  return inner.re_lo >= re_lo - tol && inner.re_hi <= re_hi + tol &&
         inner.im_lo >= im_lo - tol && inner.im_hi <= im_hi + tol;
}

std::string_view to_string(MwStatus s) {
  switch (s) {
    case MwStatus::kGuaranteed:
      return "guaranteed";
    case MwStatus::kHeuristic:
      return "heuristic";
    case MwStatus::kRefused:
      return "refused";
  }
  return "unknown";
}

ComplexMatrix BlockGrid::assemble() const {
  RequireGrid(*this, "grid");
  const std::size_t size = blocks.front().rows();
  ComplexMatrix out(m * size, m * size);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < m; ++j) out.set_block(k * size, j * size, at(k, j));
  }
  return out;
}

double lemma2_scalar(double w_a, double w_d, double n_b, double n_c) {
  if (w_a < 0.0 || w_d < 0.0 || n_b < 0.0 || n_c < 0.0) {
    throw Error(ErrorCode::kNegativeInput, "lemma2_scalar inputs must be nonnegative");
  }
  return TwoByTwoRoot(w_a, w_d, n_b + n_c);
}

double lemma5_scalar(double w_a, double w_d, double w_b_plus_c, double w_b_minus_c) {
  if (w_a < 0.0 || w_d < 0.0 || w_b_plus_c < 0.0 || w_b_minus_c < 0.0) {
    throw Error(ErrorCode::kNegativeInput, "lemma5_scalar inputs must be nonnegative");
  }
  return TwoByTwoRoot(w_a, w_d, w_b_plus_c + w_b_minus_c);
}

double theorem1_block_bound(const BlockGrid& p, const BlockGrid& q, double s) {
  if (!(s > 0.0 && s < 1.0)) {
    throw Error(ErrorCode::kExponentOutOfRange, "exponent must lie in (0, 1)");
  }
  RequireGrid(p, "P grid");
  RequireGrid(q, "Q grid");
  if (p.m != q.m || p.blocks.front().rows() != q.blocks.front().rows()) {
    throw Error(ErrorCode::kBlockShapeMismatch, "P and Q grids differ in shape");
  }
  const std::size_t m = p.m;
  const double dm = static_cast<double>(m);
  ComplexMatrix c(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      if (k == j) {
        c(k, k) = dm * DiagonalTerm(p.at(k, k), q.at(k, k));
      } else {
        const double norm = operator_norm(MixedPowers(p.at(k, j), s) + MixedPowers(q.at(k, j), s));
        c(k, j) = dm / 4.0 * norm * norm;
      }
    }
  }
  return std::sqrt(nonneg_numrad(c));
}

double theorem1_block_bound(const BlockGrid& blocks, double s) {
  RequireGrid(blocks, "grid");
  BlockGrid p{blocks.m, {}};
  BlockGrid q{blocks.m, {}};
  for (const ComplexMatrix& b : blocks.blocks) {
    p.blocks.push_back(hermitian_part(b));
    q.blocks.push_back(skew_hermitian_part(b));
  }
  return theorem1_block_bound(p, q, s);
}

double theorem1_block_bound(const BlockCompanion& bc, double s) {
  const BlockGrid p{2, {bc.p11, bc.p12, bc.p21, bc.p22}};
  const BlockGrid q{2, {bc.q11, bc.q12, bc.q21, bc.q22}};
  return theorem1_block_bound(p, q, s);
}

BoundResult corollary1_bound(const BlockCompanion& bc) {
  const double w1 = DiagonalTerm(bc.p11, bc.q11);
  const double w2 = DiagonalTerm(bc.p22, bc.q22);
  const double n = operator_norm(psd_abs(bc.p12) + psd_abs(bc.q12)) +
                   operator_norm(psd_abs(bc.p21) + psd_abs(bc.q21));
  BoundResult r = Make("corollary1", std::sqrt(w1 + w2 + std::sqrt((w1 - w2) * (w1 - w2) + n * n)));
  if (bc.zero_constant_term) r.notes = "a_1 = 0";
  return r;
}

double corollary2_bound(const ComplexMatrix& a11, const ComplexMatrix& a22) {
  if (!a11.is_square() || !a22.is_square()) {
    throw Error(ErrorCode::kNonSquare, "corollary2_bound needs square diagonal blocks");
  }
  return std::max(DiagonalTerm(hermitian_part(a11), skew_hermitian_part(a11)),
                  DiagonalTerm(hermitian_part(a22), skew_hermitian_part(a22)));
}

Rectangle kittaneh_rectangle(const Polynomial& p) {
  const std::size_t n = p.degree();
  if (n < 3) throw Error(ErrorCode::kDegreeTooSmall, "kittaneh_rectangle needs degree >= 3");
  const double c = std::cos(kPi / static_cast<double>(n));
  const double radicand = std::norm(p.a(n - 1) - 1.0) + SumSquares(p, 1, n - 2);
  auto half = [&](double x) { return 0.5 * (x + c + std::sqrt((x - c) * (x - c) + radicand)); };
  return Rectangle::Centered(half(std::abs(p.a(n).real())), half(std::abs(p.a(n).imag())));
}

Rectangle theorem3_rectangle(const Polynomial& q) {
  RequireEvenDegree(q, "theorem3_rectangle");
  const std::size_t n = q.degree() / 2;
  const double cn = std::cos(kPi / static_cast<double>(n));
  const double cn1 = std::cos(kPi / static_cast<double>(n + 1));
  const Complex top = q.a(2 * n);
  const Complex next = q.a(2 * n - 1);
  const Complex mid = q.a(n);
  const double upper_tail = SumSquares(q, n + 1, 2 * n - 2);
  const double lower_tail = SumSquares(q, 2, n - 1);

  const double re_top = std::abs(top.real());
  const double im_top = std::abs(top.imag());
  const double f = std::sqrt((re_top - cn) * (re_top - cn) + std::norm(1.0 - next) + upper_tail);
  const double j = std::sqrt((im_top - cn) * (im_top - cn) + std::norm(1.0 + next) + upper_tail);
  const double re_mid = std::abs(mid.real());
  const double im_mid = std::abs(mid.imag());
  const double g = std::sqrt(re_mid * re_mid + std::norm(1.0 - q.a(1)) + lower_tail);
  const double h = std::sqrt(im_mid * im_mid + std::norm(1.0 + q.a(1)) + lower_tail);
  const double coupling = 0.5 * (re_mid + g + im_mid + h);

  auto extent = [&](double x, double radical) {
    const double diag = 0.5 * (x + cn + radical);
    return TwoByTwoRoot(diag, cn1, coupling);
  };
  return Rectangle::Centered(extent(re_top, f), extent(im_top, j));
}

BoundResult theorem4_bound(const Polynomial& q) {
  RequireEvenDegree(q, "theorem4_bound");
  const std::size_t n = q.degree() / 2;
  const double l = LeadingBlockTerm(q, n);
  const double an = std::abs(q.a(n));
  const double lower_tail = SumSquares(q, 2, n - 1);
  const double d1 = 0.5 * (an + std::sqrt(an * an + std::norm(1.0 - q.a(1)) + lower_tail));
  const double d2 = 0.5 * (an + std::sqrt(an * an + std::norm(1.0 + q.a(1)) + lower_tail));
  const double c = std::cos(kPi / static_cast<double>(n + 1));
  return Make("theorem4", TwoByTwoRoot(l, c, d1 + d2));
}

BoundResult corollary3_bound(const Polynomial& q, int sign) {
  RequireEvenDegree(q, "corollary3_bound");
  if (sign != 1 && sign != -1) {
    throw Error(ErrorCode::kInvalidArgument, "corollary3_bound sign must be +1 or -1");
  }
  const std::size_t n = q.degree() / 2;
  for (std::size_t k = 2; k <= n; ++k) {
    if (q.a(k) != Complex{}) {
      throw Error(ErrorCode::kHypothesisViolated,
                  "corollary3_bound needs a_" + std::to_string(k) + " = 0");
    }
  }
  if (q.a(1) != Complex(static_cast<double>(sign))) {
    throw Error(ErrorCode::kHypothesisViolated,
                "corollary3_bound needs a_1 = " + std::to_string(sign));
  }
  const double l = LeadingBlockTerm(q, n);
  const double c = std::cos(kPi / static_cast<double>(n + 1));
  BoundResult r = Make("corollary3", TwoByTwoRoot(l, c, 1.0));
  r.variant = sign > 0 ? "plus" : "minus";
  return r;
}

std::pair<BoundResult, MwApplicability> mw_bound(const Polynomial& g, bool strict) {
  const std::size_t n = g.degree();
  if (n < 2) throw Error(ErrorCode::kDegreeTooSmall, "mw_bound needs degree >= 2");

  const double tail = SumSquares(g, 2, n);
  const double pivot = std::abs(g.a(1)) + 1.0;
  BoundResult r = Make("mw", 0.5 * (std::sqrt(tail) + std::sqrt(tail + pivot * pivot)));

  MwApplicability app;
  bool large_coefficient = false;
  for (std::size_t k = 2; k <= n; ++k) large_coefficient |= std::abs(g.a(k)) >= 1.0;

  if (large_coefficient) {
    app.status = MwStatus::kGuaranteed;
    app.reasons.push_back("some |c_k| >= 1 with k >= 2");
  } else {
    bool ok = true;
    for (std::size_t k = 1; k <= n; ++k) {
      if (g.a(k).imag() != 0.0) {
        app.reasons.push_back("c_" + std::to_string(k) + " is not real");
        ok = false;
        break;
      }
    }
    for (std::size_t k = 1; k <= n; ++k) {
      if (std::abs(g.a(k)) >= 1.0) {
        app.reasons.push_back("|c_" + std::to_string(k) + "| >= 1");
        ok = false;
        break;
      }
    }
    for (std::size_t k = 1; k < n; ++k) {
      if (!(std::abs(g.a(k + 1)) > std::abs(g.a(k)))) {
        app.reasons.push_back("|c_" + std::to_string(k + 1) + "| <= |c_" + std::to_string(k) +
                              "|");
        ok = false;
        break;
      }
    }
    double sum = 0.0;
    for (std::size_t k = 2; k <= n; ++k) sum += std::abs(g.a(k));
    if (sum < 2.0 / 3.0) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "sum_{k>=2} |c_k| = %.10f < 2/3", sum);
      app.reasons.emplace_back(buf);
      ok = false;
    }
    if (ok) {
      app.status = MwStatus::kGuaranteed;
      app.reasons.push_back("real, increasing, |c_k| < 1 and sum >= 2/3");
    } else {
      app.status = strict ? MwStatus::kRefused : MwStatus::kHeuristic;
    }
  }

  switch (app.status) {
    case MwStatus::kGuaranteed:
      r.applicability = Applicability::kValid;
      break;
    case MwStatus::kHeuristic:
      r.applicability = Applicability::kConditional;
      break;
    case MwStatus::kRefused:
      r.applicability = Applicability::kRefused;
      break;
  }
  for (const std::string& reason : app.reasons) {
    if (!r.notes.empty()) r.notes += "; ";
    r.notes += reason;
  }
  return {r, app};
}

Rectangle hermitian_rectangle(const Polynomial& p) {
  const ComplexMatrix c = build_companion(p);
  const HermitianEigen re = hermitian_eigs(hermitian_part(c));
  const HermitianEigen im = hermitian_eigs(skew_hermitian_part(c));
  return {re.min(), re.max(), im.min(), im.max()};
}

}  // namespace zerobound
