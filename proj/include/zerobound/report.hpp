#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zerobound/bound_result.hpp"
#include "zerobound/cartesian_bounds.hpp"
#include "zerobound/classical_bounds.hpp"
#include "zerobound/polynomial.hpp"
#include "zerobound/root_oracle.hpp"

namespace zerobound {

enum ExitCode : int {
  kExitOk = 0,
  kExitFixtureFailed = 1,
  kExitParseError = 2,
  kExitMwRefused = 3,
  kExitOracleFailure = 4,
};

enum class OutputFormat { kText, kCsv, kJson };

// Disk-bound methods in report order, then the rectangle methods.
const std::vector<std::string>& bound_method_names();
const std::vector<std::string>& rectangle_method_names();

struct CompareOptions {
  std::vector<std::string> methods;  // empty selects every method
  LindenVariant linden = LindenVariant::kPrinted;
  KittanehVariant kittaneh = KittanehVariant::kPrinted;
  double alpha = 0.5;
  std::size_t theta_samples = 512;
  bool strict_mw = false;
  bool oracle = true;
  OutputFormat format = OutputFormat::kText;
};

// Applies `key=value` lines (blank lines and lines starting with '#' are
// skipped). Keys: methods, linden, kittaneh, alpha, theta_samples, strict_mw,
// oracle, format. Throws ParseError on an unknown key or bad value.
void apply_config(std::istream& in, CompareOptions& options);

// Single-option setters shared by the config reader and the command line.
// Each throws ParseError naming the bad value.
LindenVariant parse_linden_variant(std::string_view text);
KittanehVariant parse_kittaneh_variant(std::string_view text);
OutputFormat parse_format(std::string_view text);
std::vector<std::string> parse_method_list(std::string_view text);

struct ReportRow {
  BoundResult bound;
  std::optional<Verdict> verdict;
  // 1 for the smallest usable value; 0 when the row is not ranked.
  int rank = 0;
};

struct RectangleRow {
  std::string method;
  Rectangle rect;
  std::optional<Verdict> verdict;
  std::string notes;
};

struct CompareReport {
  Polynomial polynomial;
  std::optional<RootSet> roots;
  std::string oracle_error;
  std::vector<ReportRow> rows;
  std::vector<RectangleRow> rectangles;
  std::optional<MwApplicability> mw;

  bool oracle_failed() const { return !oracle_error.empty(); }
  bool mw_refused() const;
};

// Evaluates the selected methods. A method whose preconditions fail becomes
// a refused row carrying the error text. Throws InvalidArgument for an
// unknown method name or an alpha outside (0, 1).
CompareReport run_compare(const Polynomial& p, const CompareOptions& options);

// 10 significant digits in text, 12 in CSV and JSON.
std::string format_report(const CompareReport& report, OutputFormat format);

int exit_code(const CompareReport& report);

// Rounds to 12 significant digits, the precision of machine-readable output.
double round12(double x);
std::string format_number(double x, int digits);

// ---- Fixtures ----

enum class ExpectStatus { kExact, kVariantMatched, kPaperDiscrepancy };

std::string_view to_string(ExpectStatus s);

struct Expectation {
  // A bound method name, or one of oracle_max_modulus, theorem3_s,
  // theorem3_t, kittaneh_c, kittaneh_d.
  std::string quantity;
  std::optional<std::string> variant;
  double published_value = 0.0;
  ExpectStatus status = ExpectStatus::kExact;
  // Relative for bound values, absolute for oracle moduli.
  double tolerance = 1e-7;
};

struct Fixture {
  std::string name;
  std::string polynomial;  // descending coefficients, parse_polynomial syntax
  std::string description;
  std::vector<Expectation> expected;
  // Method expected to give the smallest value among the fixture's rows.
  std::optional<std::string> tightest;
  // Expected oracle verdict for the MW bound, and whether its guard must
  // refuse a guarantee.
  std::optional<bool> mw_holds;
  bool mw_must_not_be_guaranteed = false;
};

const std::vector<Fixture>& fixtures();
// Throws UnknownFixture.
const Fixture& find_fixture(std::string_view name);

struct FixtureCheck {
  std::string label;
  std::optional<double> computed;
  std::optional<double> published;
  std::optional<ExpectStatus> status;
  bool asserted = true;
  bool passed = true;
  std::string note;
};

struct FixtureSummary {
  std::string name;
  std::string description;
  std::vector<FixtureCheck> checks;

  bool passed() const;
};

// Computes one fixture quantity for p; `roots` supplies the oracle.
double fixture_quantity(const Polynomial& p, const RootSet& roots, const std::string& quantity,
                        const std::optional<std::string>& variant);

// Throws UnknownFixture.
FixtureSummary run_fixture(std::string_view name);

std::string format_fixture(const FixtureSummary& summary);

}  // namespace zerobound
