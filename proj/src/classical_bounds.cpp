#include "zerobound/classical_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "zerobound/error.hpp"

namespace zerobound {

namespace {

constexpr double kPi = std::numbers::pi;

// sum_{k=lo}^{hi} |a_k|^2, empty when lo > hi.
double SumSquares(const Polynomial& p, std::size_t lo, std::size_t hi) {
  double sum = 0.0;
  for (std::size_t k = lo; k <= hi && k <= p.degree(); ++k) sum += std::norm(p.a(k));
  return sum;
}

BoundResult Make(std::string method, double value) {
  BoundResult r;
  r.method = std::move(method);
  r.value = value;
  return r;
}

void RequireDegree(const Polynomial& p, std::size_t min_degree, const char* method) {
  if (p.degree() < min_degree) {
    throw Error(ErrorCode::kDegreeTooSmall, std::string(method) + " needs degree >= " +
                                                std::to_string(min_degree));
  }
}

}  // namespace

BoundResult cauchy(const Polynomial& p) {
  return Make("cauchy", 1.0 + p.max_abs_coefficient());
}

BoundResult carmichael_mason(const Polynomial& p) {
  return Make("carmichael_mason", std::sqrt(1.0 + SumSquares(p, 1, p.degree())));
}

BoundResult montel(const Polynomial& p) {
  double sum = 0.0;
  for (const Complex& c : p.lower()) sum += std::abs(c);
  return Make("montel", std::max(1.0, sum));
}

BoundResult fujii_kubo(const Polynomial& p) {
  const std::size_t n = p.degree();
  const double value = std::cos(kPi / static_cast<double>(n + 1)) +
                       0.5 * (std::abs(p.a(n)) + SumSquares(p, 1, n));
  return Make("fujii_kubo", value);
}

BoundResult abdurakhmanov(const Polynomial& p) {
  const std::size_t n = p.degree();
  const double an = std::abs(p.a(n));
  const double c = std::cos(kPi / static_cast<double>(n));
  const double tail = 1.0 + SumSquares(p, 1, n - 1);
  return Make("abdurakhmanov", 0.5 * (an + c + std::sqrt((an - c) * (an - c) + tail * tail)));
}

BoundResult linden(const Polynomial& p, LindenVariant variant) {
  RequireDegree(p, 2, "linden");
  const std::size_t n = p.degree();
  const double dn = static_cast<double>(n);
  const double an = std::abs(p.a(n));
  const double correction = variant == LindenVariant::kPrinted ? an * an / dn : an / dn;
  const double radicand = (dn - 1.0) / dn * (dn - 1.0 + SumSquares(p, 1, n) - correction);
  if (radicand < 0.0) {
    throw Error(ErrorCode::kNegativeRadicand, "linden radicand is " + std::to_string(radicand));
  }
  BoundResult r = Make("linden", an / dn + std::sqrt(radicand));
  r.variant = variant == LindenVariant::kPrinted ? "printed" : "table";
  return r;
}

BoundResult kittaneh_disk(const Polynomial& p, KittanehVariant variant) {
  RequireDegree(p, 3, "kittaneh");
  const std::size_t n = p.degree();
  const double an = std::abs(p.a(n));
  const double c = std::cos(kPi / static_cast<double>(n));
  const double an1 = std::abs(p.a(n - 1));
  const double middle = variant == KittanehVariant::kPrinted ? an1 - 1.0 : an1 + 1.0;
  const double radicand = (an - c) * (an - c) + middle * middle + SumSquares(p, 1, n - 2);
  BoundResult r = Make("kittaneh", 0.5 * (an + c + std::sqrt(radicand)));
  r.variant = variant == KittanehVariant::kPrinted ? "printed" : "plus_one";
  return r;
}

BoundResult abu_omar_kittaneh(const Polynomial& p) {
  const std::size_t n = p.degree();
  const double alpha = std::sqrt(SumSquares(p, 1, n));
  const double beta = std::sqrt(SumSquares(p, 1, n - 1));
  const double c = std::cos(kPi / static_cast<double>(n + 1));
  const double x = 0.5 * (std::abs(p.a(n)) + alpha);
  return Make("abu_omar_kittaneh",
              0.5 * (x + c + std::sqrt((x - c) * (x - c) + 4.0 * beta)));
}

double al_dolat_objective(const Polynomial& p, double t) {
  const std::size_t n = p.degree();
  const double an = std::abs(p.a(n));
  const double c = std::cos(kPi / static_cast<double>(n));
  const double rest = SumSquares(p, 1, n - 1);
  return 0.5 * (an + 2.0 * c + std::sqrt(t * t * an * an + rest) +
                std::sqrt(1.0 + (1.0 - t) * (1.0 - t) * an * an));
}

BoundResult al_dolat(const Polynomial& p) {
  RequireDegree(p, 2, "al_dolat");
  constexpr int kGrid = 1024;
  double best_t = 0.0;
  double best = al_dolat_objective(p, 0.0);
  for (int k = 1; k <= kGrid; ++k) {
    const double t = static_cast<double>(k) / kGrid;
    const double v = al_dolat_objective(p, t);
    if (v < best) {
      best = v;
      best_t = t;
    }
  }
  // The objective is convex in t, so golden-section inside the neighbouring
  // grid cells finds the minimiser.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = std::max(0.0, best_t - 1.0 / kGrid);
  double hi = std::min(1.0, best_t + 1.0 / kGrid);
  while (hi - lo > 1e-10) {
    const double x1 = hi - inv_phi * (hi - lo);
    const double x2 = lo + inv_phi * (hi - lo);
    if (al_dolat_objective(p, x1) < al_dolat_objective(p, x2)) {
      hi = x2;
    } else {
      lo = x1;
    }
  }
  const double t_refined = 0.5 * (lo + hi);
  const double refined = al_dolat_objective(p, t_refined);
  if (refined < best) {
    best = refined;
    best_t = t_refined;
  }
  BoundResult r = Make("al_dolat", best);
  char buf[48];
  std::snprintf(buf, sizeof buf, "t*=%.10f", best_t);
  r.notes = buf;
  return r;
}

std::vector<BoundResult> all_classical_bounds(const Polynomial& p) {
  std::vector<BoundResult> out{cauchy(p), carmichael_mason(p), montel(p), fujii_kubo(p),
                               abdurakhmanov(p)};
  if (p.degree() >= 2) {
    out.push_back(linden(p, LindenVariant::kPrinted));
    out.push_back(linden(p, LindenVariant::kTable));
  }
  if (p.degree() >= 3) {
    out.push_back(kittaneh_disk(p, KittanehVariant::kPrinted));
    out.push_back(kittaneh_disk(p, KittanehVariant::kPlusOne));
  }
  out.push_back(abu_omar_kittaneh(p));
  if (p.degree() >= 2) out.push_back(al_dolat(p));
  return out;
}

}  // namespace zerobound
