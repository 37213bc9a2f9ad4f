// Acceptance suite: one PASS/FAIL line per criterion. With no arguments every
// criterion runs; `--criterion N` runs just one. The exit status is nonzero
// when any selected criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "support/oracles.hpp"
#include "support/random_polys.hpp"
#include "zerobound/cartesian_bounds.hpp"
#include "zerobound/classical_bounds.hpp"
#include "zerobound/companion.hpp"
#include "zerobound/error.hpp"
#include "zerobound/linalg.hpp"
#include "zerobound/root_oracle.hpp"
#include "zerobound/toeplitz.hpp"

namespace zerobound {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kValidity = 1e-9;

// Collects the failed checks of one criterion.
class Criterion {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }

  void relative(const std::string& label, double computed, double expected, double tol) {
    check(std::abs(computed - expected) <= tol * std::abs(expected),
          label + " = " + Fmt(computed) + ", expected " + Fmt(expected));
  }

  void absolute(const std::string& label, double computed, double expected, double tol) {
    check(std::abs(computed - expected) <= tol,
          label + " = " + Fmt(computed) + ", expected " + Fmt(expected));
  }

  bool passed() const { return failures_.empty(); }
  int checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

  static std::string Fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
  }

 private:
  int checks_ = 0;
  std::vector<std::string> failures_;
};

Polynomial TableOne() { return parse_polynomial("1, 5/4, 4/3, 1, 2, 3, 4"); }
Polynomial TableTwo() { return parse_polynomial("1, 2i, 4i, 0, 0, 1/4, 1/16"); }
Polynomial TableThree() { return parse_polynomial("1, 1/2, 0, 0, 1/16, 0, 1"); }
Polynomial TableFour() { return parse_polynomial("1, 1/4, 1/9, 1/16, 1/25, 1/36, 1/49"); }
Polynomial TableFive() { return parse_polynomial("1, 0, 1/3, 1/4, 1/9, 0, 1/100"); }

// The printed rows of a comparison table, keyed by label.
using TableRows = std::map<std::string, double>;

void ExpectTightest(Criterion& c, const std::string& table, const TableRows& rows,
                    const std::string& method) {
  const auto best = std::min_element(rows.begin(), rows.end(),
                                     [](const auto& a, const auto& b) { return a.second < b.second; });
  c.check(best->first == method,
          table + " tightest is " + best->first + " (" + Criterion::Fmt(best->second) + "), expected " +
              method + " (" + Criterion::Fmt(rows.at(method)) + ")");
}

void ExpectValid(Criterion& c, const std::string& label, double value, double max_modulus) {
  c.check(value >= max_modulus - kValidity,
          label + " = " + Criterion::Fmt(value) + " below max modulus " + Criterion::Fmt(max_modulus));
}

bool RectangleHolds(const Rectangle& r, const RootSet& roots) {
  return validate_rectangle(roots, r).holds;
}

// ---- 1. Table 1 ----
Criterion TableOneReproduction() {
  Criterion c;
  const Polynomial p = TableOne();
  const RootSet roots = find_roots(p);
  TableRows rows{
      {"cauchy", cauchy(p).value},
      {"carmichael_mason", carmichael_mason(p).value},
      {"montel", montel(p).value},
      {"fujii_kubo", fujii_kubo(p).value},
      {"abdurakhmanov", abdurakhmanov(p).value},
      {"abu_omar_kittaneh", abu_omar_kittaneh(p).value},
      {"al_dolat", al_dolat(p).value},
      {"kittaneh[plus_one]", kittaneh_disk(p, KittanehVariant::kPlusOne).value},
      {"linden[table]", linden(p, LindenVariant::kTable).value},
      {"corollary1", corollary1_bound(build_block_companion(p)).value},
  };
  const std::map<std::string, double> published{
      {"cauchy", 5.0},
      {"carmichael_mason", 5.860057831},
      {"montel", 12.58333333},
      {"fujii_kubo", 18.19610776},
      {"abdurakhmanov", 17.44802607},
      {"abu_omar_kittaneh", 4.916052295},
      {"al_dolat", 4.867955746},
      {"kittaneh[plus_one]", 4.040959271},
      {"linden[table]", 5.845408848},
  };
  for (const auto& [name, value] : published) c.relative(name, rows.at(name), value, 1e-7);
  c.relative("corollary1", rows.at("corollary1"), 3.941508802, 1e-6);
  ExpectValid(c, "corollary1", rows.at("corollary1"), roots.max_modulus);
  ExpectTightest(c, "table1", rows, "corollary1");
  return c;
}

// ---- 2. Table 3 ----
Criterion TableThreeReproduction() {
  Criterion c;
  const Polynomial p = TableThree();
  const RootSet roots = find_roots(p);
  TableRows rows{
      {"cauchy", cauchy(p).value},
      {"carmichael_mason", carmichael_mason(p).value},
      {"montel", montel(p).value},
      {"fujii_kubo", fujii_kubo(p).value},
      {"abdurakhmanov", abdurakhmanov(p).value},
      {"abu_omar_kittaneh", abu_omar_kittaneh(p).value},
      {"al_dolat", al_dolat(p).value},
      {"linden[table]", linden(p, LindenVariant::kTable).value},
      {"kittaneh[printed]", kittaneh_disk(p, KittanehVariant::kPrinted).value},
      {"theorem4", theorem4_bound(p).value},
  };
  const std::map<std::string, double> published{
      {"cauchy", 2.0},
      {"carmichael_mason", 1.501301519},
      {"montel", 1.5625},
      {"fujii_kubo", 1.777921993},
      {"abdurakhmanov", 1.701542875},
      {"abu_omar_kittaneh", 1.857439836},
      {"al_dolat", 2.147748325},
      {"linden[table]", 2.350962955},
  };
  for (const auto& [name, value] : published) c.relative(name, rows.at(name), value, 1e-7);
  ExpectValid(c, "kittaneh[printed]", rows.at("kittaneh[printed]"), roots.max_modulus);
  ExpectValid(c, "kittaneh[plus_one]", kittaneh_disk(p, KittanehVariant::kPlusOne).value,
              roots.max_modulus);
  ExpectValid(c, "theorem4", rows.at("theorem4"), roots.max_modulus);
  ExpectTightest(c, "table3", rows, "theorem4");
  return c;
}

// The printed rows shared by Tables 4 and 5.
TableRows MwTableRows(const Polynomial& p) {
  return {
      {"cauchy", cauchy(p).value},
      {"carmichael_mason", carmichael_mason(p).value},
      {"montel", montel(p).value},
      {"fujii_kubo", fujii_kubo(p).value},
      {"abdurakhmanov", abdurakhmanov(p).value},
      {"linden[table]", linden(p, LindenVariant::kTable).value},
      {"kittaneh[printed]", kittaneh_disk(p, KittanehVariant::kPrinted).value},
      {"abu_omar_kittaneh", abu_omar_kittaneh(p).value},
      {"al_dolat", al_dolat(p).value},
      {"theorem4", theorem4_bound(p).value},
      {"mw", mw_bound(p).first.value},
  };
}

// ---- 3. Tables 4 and 5, MW ----
Criterion MwTables() {
  Criterion c;
  struct Case {
    const char* name;
    Polynomial p;
    double mw;
    double modulus;
  };
  const std::vector<Case> cases{{"table4", TableFour(), 0.6721175730, 0.5447544053},
                                {"table5", TableFive(), 0.7647166222, 0.7419983061}};
  for (const Case& k : cases) {
    const std::string name = k.name;
    const RootSet roots = find_roots(k.p);
    const TableRows rows = MwTableRows(k.p);
    c.relative(name + " mw", rows.at("mw"), k.mw, 1e-7);
    c.absolute(name + " max modulus", roots.max_modulus, k.modulus, 1e-6);
    ExpectValid(c, name + " mw", rows.at("mw"), roots.max_modulus);
    ExpectTightest(c, name, rows, "mw");
  }
  return c;
}

// ---- 4. MW counterexample suite ----
Criterion MwCounterexamples() {
  Criterion c;
  struct Case {
    const char* name;
    const char* poly;
    double mw;
    double modulus;
    bool holds;
  };
  const std::vector<Case> cases{
      {"h1", "1, 0, 1/6, 0, 1/5, 0, 1/4", 0.7685824855, 0.8120242973, false},
      {"h2", "1, 1/4+1/4i, 1/9i, 1/16i, 1/25, 1/36, 1/49", 0.7337440145, 0.6408240287, true},
      {"h3", "1, 0, 1/4, 0, 1/3, 0, 1/4", 0.8671411790, 0.8310538215, true},
  };
  for (const Case& k : cases) {
    const std::string name = k.name;
    const Polynomial p = parse_polynomial(k.poly);
    const RootSet roots = find_roots(p);
    const auto [mw, guard] = mw_bound(p);
    c.relative(name + " mw", mw.value, k.mw, 1e-7);
    c.absolute(name + " max modulus", roots.max_modulus, k.modulus, 1e-6);
    const Verdict v = validate_bound(roots, mw);
    c.check(v.holds == k.holds, name + " verdict " + (v.holds ? "holds" : "violated"));
    if (name == "h1") {
      c.check(guard.status != MwStatus::kGuaranteed, "h1 guard reports guaranteed");
    }
  }
  return c;
}

// ---- 5. Table 2 rectangles ----
Criterion TableTwoRectangles() {
  Criterion c;
  const Polynomial p = TableTwo();
  const RootSet roots = find_roots(p);
  const Rectangle t3 = theorem3_rectangle(p);
  const Rectangle kit = kittaneh_rectangle(p);
  c.relative("s", t3.re_hi, 2.476786336, 1e-7);
  c.check(roots.roots.size() == 6, "expected six roots");
  c.check(RectangleHolds(t3, roots), "theorem3 rectangle (s, t) misses a root");
  c.check(RectangleHolds(kit, roots), "kittaneh rectangle (c, d) misses a root");
  return c;
}

// ---- 6. Validity property suite ----
Criterion ValiditySuite() {
  Criterion c;
  for (const Polynomial& p : testing::SuitePolynomials(2, 12, false)) {
    const RootSet roots = find_roots(p);
    const std::string tag = " on " + to_string(p);
    for (const BoundResult& b : all_classical_bounds(p)) {
      const std::string label = b.variant ? b.method + "[" + *b.variant + "]" : b.method;
      ExpectValid(c, label + tag, b.value, roots.max_modulus);
    }
    const auto [mw, guard] = mw_bound(p);
    if (guard.status == MwStatus::kGuaranteed) ExpectValid(c, "mw" + tag, mw.value, roots.max_modulus);
  }
  for (const Polynomial& q : testing::SuitePolynomials(4, 12, true)) {
    const RootSet roots = find_roots(q);
    const std::string tag = " on " + to_string(q);
    const BlockCompanion bc = build_block_companion(q);
    ExpectValid(c, "corollary1" + tag, corollary1_bound(bc).value, roots.max_modulus);
    for (double s : {0.25, 0.5, 0.75}) {
      ExpectValid(c, "theorem1(s=" + Criterion::Fmt(s) + ")" + tag, theorem1_block_bound(bc, s),
                  roots.max_modulus);
    }
    ExpectValid(c, "theorem4" + tag, theorem4_bound(q).value, roots.max_modulus);
    for (int sign : {1, -1}) {
      try {
        ExpectValid(c, "corollary3" + tag, corollary3_bound(q, sign).value, roots.max_modulus);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kHypothesisViolated) throw;
      }
    }
    ExpectValid(c, "numerical_radius" + tag, numerical_radius_sweep(build_companion(q)),
                roots.max_modulus);
    const auto [mw, guard] = mw_bound(q);
    if (guard.status == MwStatus::kGuaranteed) ExpectValid(c, "mw" + tag, mw.value, roots.max_modulus);
    c.check(RectangleHolds(hermitian_rectangle(q), roots), "hermitian_rectangle misses a root" + tag);
    c.check(RectangleHolds(theorem3_rectangle(q), roots), "theorem3_rectangle misses a root" + tag);
    c.check(RectangleHolds(kittaneh_rectangle(q), roots), "kittaneh_rectangle misses a root" + tag);
  }
  return c;
}

// ---- 7. Linear-algebra invariants ----
Criterion LinearAlgebra() {
  Criterion c;
  std::mt19937_64 rng(testing::kSuiteSeed + 7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 10);
    const std::string tag = " (trial " + std::to_string(trial) + ", n=" + std::to_string(n) + ")";

    const ComplexMatrix h = testing::RandomHermitian(rng, n);
    const HermitianEigen eig = hermitian_eigs(h);
    const ComplexMatrix lambda = ComplexMatrix::Diagonal(eig.eigenvalues);
    const ComplexMatrix rebuilt = eig.eigenvectors * lambda * eig.eigenvectors.adjoint();
    const double eig_err = frobenius_norm(rebuilt - h) / frobenius_norm(h);
    c.check(eig_err <= 1e-10, "eigen reconstruction error " + Criterion::Fmt(eig_err) + tag);

    const ComplexMatrix x = testing::RandomMatrix(rng, n, n);
    const ComplexMatrix abs_x = psd_abs(x);
    const ComplexMatrix xx = x.adjoint() * x;
    const double abs_err = frobenius_norm(abs_x * abs_x - xx) / frobenius_norm(xx);
    c.check(abs_err <= 1e-9, "psd_abs reconstruction error " + Criterion::Fmt(abs_err) + tag);

    const double w = numerical_radius_sweep(x);
    const double norm = testing::LargestSingularValue(x);
    c.check(w >= 0.5 * norm - 1e-12 && w <= norm + 1e-7,
            "w = " + Criterion::Fmt(w) + " outside [||X||/2, ||X||], ||X|| = " + Criterion::Fmt(norm) + tag);
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    ComplexMatrix shift(n, n);
    for (std::size_t i = 1; i < n; ++i) shift(i, i - 1) = 1.0;
    c.absolute("w(shift n=" + std::to_string(n) + ")", numerical_radius_sweep(shift),
               std::cos(kPi / static_cast<double>(n + 1)), 1e-6);
  }
  return c;
}

// det(zI - tri(b, a, c)) from the three-term recurrence
// D_k = (z - a) D_{k-1} - bc D_{k-2}, as descending coefficients.
Polynomial ToeplitzCharpoly(const TriToeplitz& t) {
  std::vector<Complex> prev{1.0};          // D_0, ascending powers
  std::vector<Complex> cur{-t.a, 1.0};     // D_1
  const Complex bc = t.b * t.c;
  for (std::size_t k = 2; k <= t.n; ++k) {
    std::vector<Complex> next(k + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i + 1] += cur[i];
      next[i] -= t.a * cur[i];
    }
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= bc * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return Polynomial(std::vector<Complex>(cur.begin(), cur.end() - 1));
}

// ---- 8. Tridiagonal Toeplitz ----
Criterion Toeplitz() {
  Criterion c;
  std::mt19937_64 rng(testing::kSuiteSeed + 8);
  std::uniform_real_distribution<double> modulus(0.25, 2.0);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_int_distribution<std::size_t> size(2, 8);
  for (int trial = 0; trial < 50; ++trial) {
    TriToeplitz t;
    t.n = size(rng);
    t.b = std::polar(modulus(rng), angle(rng));
    t.a = std::polar(modulus(rng), angle(rng));
    t.c = std::polar(modulus(rng), angle(rng));
    const std::string tag = " (trial " + std::to_string(trial) + ")";
    const double closed = toeplitz_spectral_radius(t);
    const double via_roots = find_roots(ToeplitzCharpoly(t)).max_modulus;
    const double via_matrix = testing::MaxModulus(testing::Eigenvalues(t.assemble()));
    c.absolute("r closed form vs charpoly roots" + tag, closed, via_roots, 1e-9);
    c.absolute("r closed form vs matrix eigenvalues" + tag, closed, via_matrix, 1e-9);
  }
  for (int trial = 0; trial < 20; ++trial) {
    TriToeplitz t;
    t.n = size(rng);
    const double m = modulus(rng);
    t.b = std::polar(m, angle(rng));
    t.c = std::polar(m, angle(rng));
    t.a = std::polar(modulus(rng), angle(rng));
    const std::string tag = " (normal trial " + std::to_string(trial) + ")";
    c.check(is_normal(t), "not classified normal" + tag);
    c.absolute("w = r" + tag, numerical_radius_sweep(t.assemble()), toeplitz_spectral_radius(t),
               1e-6);
  }
  return c;
}

// ---- 9. Containment chain ----
Criterion ContainmentChain() {
  Criterion c;
  for (const Polynomial& q : testing::SuitePolynomials(4, 12, true)) {
    const Rectangle herm = hermitian_rectangle(q);
    const std::string tag = " on " + to_string(q);
    c.check(theorem3_rectangle(q).contains(herm, 1e-9), "hermitian not inside theorem3" + tag);
    c.check(kittaneh_rectangle(q).contains(herm, 1e-9), "hermitian not inside kittaneh" + tag);
  }
  return c;
}

struct Entry {
  int number;
  const char* title;
  std::function<Criterion()> run;
};

const std::vector<Entry>& Entries() {
  static const std::vector<Entry> entries{
      {1, "Table 1 reproduction", TableOneReproduction},
      {2, "Table 3 reproduction", TableThreeReproduction},
      {3, "Tables 4-5 MW reproduction", MwTables},
      {4, "MW counterexample suite h1-h3", MwCounterexamples},
      {5, "Table 2 rectangles", TableTwoRectangles},
      {6, "validity property suite", ValiditySuite},
      {7, "linear-algebra invariants", LinearAlgebra},
      {8, "tridiagonal Toeplitz", Toeplitz},
      {9, "containment chain", ContainmentChain},
  };
  return entries;
}

bool Run(const Entry& e, bool verbose) {
  Criterion c;
  std::string error;
  try {
    c = e.run();
  } catch (const std::exception& ex) {
    error = ex.what();
  }
  const bool ok = error.empty() && c.passed();
  std::printf("%s  C%d  %-32s %d checks, %zu failed%s%s\n", ok ? "PASS" : "FAIL", e.number, e.title,
              c.checks(), c.failures().size(), error.empty() ? "" : ", error: ", error.c_str());
  const std::size_t shown = verbose ? c.failures().size() : std::min<std::size_t>(5, c.failures().size());
  for (std::size_t i = 0; i < shown; ++i) std::printf("      %s\n", c.failures()[i].c_str());
  if (shown < c.failures().size()) {
    std::printf("      ... %zu more (--verbose lists all)\n", c.failures().size() - shown);
  }
  std::fflush(stdout);
  return ok;
}

}  // namespace
}  // namespace zerobound

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int criterion = 0;
  bool verbose = false;
  app.add_option("--criterion", criterion, "run a single criterion (1-9)")->check(CLI::Range(1, 9));
  app.add_flag("--verbose", verbose, "list every failed check");
  CLI11_PARSE(app, argc, argv);

  bool all_ok = true;
  for (const zerobound::Entry& e : zerobound::Entries()) {
    if (criterion != 0 && e.number != criterion) continue;
    all_ok = zerobound::Run(e, verbose) && all_ok;
  }
  return all_ok ? 0 : 1;
}
