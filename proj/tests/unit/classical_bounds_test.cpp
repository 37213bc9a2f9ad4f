#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support/oracles.hpp"
#include "support/random_polys.hpp"
#include "zerobound/classical_bounds.hpp"
#include "zerobound/error.hpp"

namespace zerobound {
namespace {

constexpr double kPi = std::numbers::pi;

Polynomial TableOne() { return parse_polynomial("1, 5/4, 4/3, 1, 2, 3, 4"); }
Polynomial TableThree() { return parse_polynomial("1, 1/2, 0, 0, 1/16, 0, 1"); }
Polynomial Monomial(std::size_t n) { return Polynomial(std::vector<Complex>(n, 0.0)); }

void ExpectRelative(double actual, double expected, double tol = 1e-7) {
  EXPECT_LE(std::abs(actual - expected), tol * std::abs(expected))
      << "actual " << actual << " expected " << expected;
}

TEST(CauchyTest, Examples) {
  EXPECT_DOUBLE_EQ(cauchy(TableOne()).value, 5.0);
  EXPECT_DOUBLE_EQ(cauchy(TableThree()).value, 2.0);
  EXPECT_DOUBLE_EQ(cauchy(Monomial(4)).value, 1.0);
}

TEST(CarmichaelMasonTest, Examples) {
  ExpectRelative(carmichael_mason(TableOne()).value, 5.860057831);
  ExpectRelative(carmichael_mason(TableThree()).value, 1.501301519);
  EXPECT_DOUBLE_EQ(carmichael_mason(parse_polynomial("1, 0, -1")).value, std::sqrt(2.0));
}

TEST(MontelTest, Examples) {
  ExpectRelative(montel(TableOne()).value, 12.58333333);
  EXPECT_DOUBLE_EQ(montel(parse_polynomial("1, 1/4, 1/9, 1/16, 1/25, 1/36, 1/49")).value, 1.0);
  EXPECT_DOUBLE_EQ(montel(parse_polynomial("1, 0, -1")).value, 1.0);
}

TEST(FujiiKuboTest, Examples) {
  ExpectRelative(fujii_kubo(TableOne()).value, 18.19610776);
  ExpectRelative(fujii_kubo(TableThree()).value, 1.777921993);
  EXPECT_NEAR(fujii_kubo(Monomial(2)).value, 0.5, 1e-15);
}

TEST(AbdurakhmanovTest, Examples) {
  ExpectRelative(abdurakhmanov(TableOne()).value, 17.44802607);
  ExpectRelative(abdurakhmanov(TableThree()).value, 1.701542875);
  EXPECT_NEAR(abdurakhmanov(Monomial(2)).value, 0.5, 1e-15);
}

TEST(LindenTest, Variants) {
  const BoundResult table = linden(TableOne(), LindenVariant::kTable);
  ExpectRelative(table.value, 5.845408848);
  EXPECT_EQ(table.variant, "table");
  ExpectRelative(linden(TableThree(), LindenVariant::kTable).value, 2.350962955);

  // The displayed formula, evaluated independently.
  const Polynomial p = TableOne();
  double sum = 0.0;
  for (const Complex& c : p.lower()) sum += std::norm(c);
  const double an = 1.25;
  const double printed = an / 6.0 + std::sqrt(5.0 / 6.0 * (5.0 + sum - an * an / 6.0));
  const BoundResult r = linden(p, LindenVariant::kPrinted);
  EXPECT_NEAR(r.value, printed, 1e-13);
  EXPECT_NEAR(r.value, 5.8415578, 1e-6);
  EXPECT_EQ(r.variant, "printed");
}

TEST(LindenTest, Errors) {
  try {
    linden(Polynomial({1.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegreeTooSmall);
  }
  // n = 2, table variant: radicand (1/2)(1 + |a_2|^2 - |a_2|/2) stays positive,
  // so only the printed degree-2 form with all zeros is probed here.
  EXPECT_NO_THROW(linden(Monomial(2), LindenVariant::kPrinted));
}

TEST(KittanehTest, Variants) {
  ExpectRelative(kittaneh_disk(TableOne(), KittanehVariant::kPlusOne).value, 4.040959271);
  EXPECT_NEAR(kittaneh_disk(TableOne(), KittanehVariant::kPrinted).value, 3.8084012, 1e-6);
  const double c = std::cos(kPi / 3.0);
  EXPECT_NEAR(kittaneh_disk(Monomial(3)).value, 0.5 * (c + std::sqrt(c * c + 1.0)), 1e-15);
}

TEST(KittanehTest, DegreeTooSmall) {
  try {
    kittaneh_disk(Monomial(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegreeTooSmall);
  }
}

TEST(AbuOmarKittanehTest, Examples) {
  ExpectRelative(abu_omar_kittaneh(TableOne()).value, 4.916052295);
  ExpectRelative(abu_omar_kittaneh(TableThree()).value, 1.857439836);
  EXPECT_NEAR(abu_omar_kittaneh(Monomial(2)).value, 0.5, 1e-15);
}

TEST(AlDolatTest, Examples) {
  const BoundResult r = al_dolat(TableOne());
  ExpectRelative(r.value, 4.867955746);
  EXPECT_NE(r.notes.find("t*=0.849"), std::string::npos) << r.notes;
  ExpectRelative(al_dolat(TableThree()).value, 2.147748325);
}

TEST(AlDolatTest, ConstantObjectiveWhenLeadingCoefficientVanishes) {
  // z^4 + 0 z^3 + z^2 + 2z + 1: a_n = 0.
  const Polynomial p({1.0, 2.0, 1.0, 0.0});
  const double expected = 0.5 * (2.0 * std::cos(kPi / 4.0) + std::sqrt(1.0 + 4.0 + 1.0) + 1.0);
  EXPECT_NEAR(al_dolat(p).value, expected, 1e-14);
}

TEST(AlDolatTest, MinimumNotAboveEndpoints) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 50; ++i) {
    const Polynomial p = testing::RandomPolynomial(rng, 2 + i % 11, i % 2 == 1);
    const double v = al_dolat(p).value;
    EXPECT_LE(v, al_dolat_objective(p, 0.0) + 1e-15);
    EXPECT_LE(v, al_dolat_objective(p, 1.0) + 1e-15);
    // And no interior point on a fine grid does better.
    for (int k = 1; k < 200; ++k) EXPECT_LE(v, al_dolat_objective(p, k / 200.0) + 1e-12);
  }
}

TEST(ClassicalBoundsTest, ScalingCoefficientsNeverDecreasesSimpleBounds) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 50; ++i) {
    const Polynomial p = testing::RandomPolynomial(rng, 2 + i % 11, i % 2 == 1);
    std::vector<Complex> doubled(p.lower().begin(), p.lower().end());
    for (Complex& c : doubled) c *= 2.0;
    const Polynomial q(doubled);
    EXPECT_GE(cauchy(q).value, cauchy(p).value);
    EXPECT_GE(montel(q).value, montel(p).value);
    EXPECT_GE(carmichael_mason(q).value, carmichael_mason(p).value);
  }
}

TEST(ClassicalBoundsTest, AllBoundsListsBothVariants) {
  const std::vector<BoundResult> all = all_classical_bounds(TableOne());
  EXPECT_EQ(all.size(), 11u);
  EXPECT_EQ(all_classical_bounds(Polynomial({1.0, 1.0})).size(), 9u);
  EXPECT_EQ(all_classical_bounds(Polynomial({1.0})).size(), 6u);
}

// Every classical bound on the seeded suite holds against the Eigen
// companion eigenvalues, apart from the printed formulas that have
// counterexamples (below). The acceptance binary reports those failures
// against the full suite.
bool KnownToFail(const BoundResult& b, std::size_t degree) {
  if (b.method == "kittaneh" && b.variant == "printed") return true;
  if (degree == 2) {
    return b.method == "fujii_kubo" || b.method == "abdurakhmanov" ||
           (b.method == "linden" && b.variant == "table");
  }
  return false;
}

TEST(ClassicalBoundsTest, ValidOnRandomSuite) {
  const std::vector<Polynomial> suite = testing::SuitePolynomials(2, 12, false);
  for (const Polynomial& p : suite) {
    const double max_modulus = testing::MaxModulus(testing::CompanionRoots(p));
    for (const BoundResult& b : all_classical_bounds(p)) {
      if (KnownToFail(b, p.degree())) continue;
      EXPECT_GE(b.value, max_modulus - 1e-9) << b.method << " on " << to_string(p);
    }
  }
}

TEST(ClassicalBoundsTest, PrintedFormulasHaveCounterexamples) {
  // z^2 + 0.1 z + 0.76 has both zeros of modulus sqrt(0.76).
  const Polynomial quadratic({0.76, 0.1});
  const double r2 = std::sqrt(0.76);
  EXPECT_LT(fujii_kubo(quadratic).value, r2);
  EXPECT_LT(abdurakhmanov(quadratic).value, r2);

  // z^3 + z + 1 has a conjugate pair of modulus about 1.2106.
  const Polynomial cubic({1.0, 1.0, 0.0});
  const double r3 = testing::MaxModulus(testing::CompanionRoots(cubic));
  EXPECT_NEAR(r3, 1.2106, 1e-4);
  EXPECT_LT(kittaneh_disk(cubic, KittanehVariant::kPrinted).value, r3);
  EXPECT_GE(kittaneh_disk(cubic, KittanehVariant::kPlusOne).value, r3);
}

}  // namespace
}  // namespace zerobound
