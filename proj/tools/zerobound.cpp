#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zerobound/error.hpp"
#include "zerobound/polynomial.hpp"
#include "zerobound/report.hpp"
#include "zerobound/root_oracle.hpp"

namespace {

using namespace zerobound;

void ApplyVariant(const std::string& spec, CompareOptions& options) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) {
    throw Error(ErrorCode::kParseError, "--variant expects method=variant, got '" + spec + "'");
  }
  const std::string method = spec.substr(0, eq);
  const std::string value = spec.substr(eq + 1);
  if (method == "linden") {
    options.linden = parse_linden_variant(value);
  } else if (method == "kittaneh") {
    options.kittaneh = parse_kittaneh_variant(value);
  } else {
    throw Error(ErrorCode::kParseError, "no variants for method '" + method + "'");
  }
}

int RunRoots(const std::string& poly_text) {
  const Polynomial p = parse_polynomial(poly_text);
  RootSet roots;
  try {
    roots = find_roots(p);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitOracleFailure;
  }
  std::cout << "polynomial: " << to_string(p) << "\n";
  for (std::size_t i = 0; i < roots.roots.size(); ++i) {
    const Complex z = roots.roots[i];
    std::printf("%.12g%+.12gi  |z| = %.12g  residual %.3g\n", z.real(), z.imag(), std::abs(z),
                roots.residuals[i]);
  }
  std::cout << "max modulus: " << format_number(roots.max_modulus, 12) << "\n";
  return kExitOk;
}

int RunFixtures(const std::string& name) {
  std::vector<std::string> names;
  if (name == "all") {
    for (const Fixture& f : fixtures()) names.push_back(f.name);
  } else {
    names.push_back(name);
  }
  bool ok = true;
  for (const std::string& n : names) {
    const FixtureSummary summary = run_fixture(n);
    std::cout << format_fixture(summary);
    ok = ok && summary.passed();
  }
  return ok ? kExitOk : kExitFixtureFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds on the zeros of complex polynomials"};
  app.require_subcommand(1);

  std::string poly_text;
  std::string methods;
  std::vector<std::string> variants;
  double alpha = 0.5;
  std::size_t theta_samples = 512;
  bool strict_mw = false;
  bool oracle = false;
  bool no_oracle = false;
  std::string format;
  std::string config_path;

  CLI::App* compare = app.add_subcommand("compare", "Evaluate bounds for one polynomial");
  compare->add_option("--poly", poly_text, "Descending coefficients, comma separated")->required();
  auto* methods_opt = compare->add_option("--methods", methods, "Comma-separated methods or 'all'");
  compare->add_option("--variant", variants, "linden=printed|table, kittaneh=printed|plus_one");
  auto* alpha_opt = compare->add_option("--alpha", alpha, "Exponent s in (0, 1) for the block bound");
  auto* theta_opt =
      compare->add_option("--theta-samples", theta_samples, "Grid size of the numerical-radius sweep");
  auto* strict_opt = compare->add_flag("--strict-mw", strict_mw, "Refuse MW outside its guard");
  auto* format_opt = compare->add_option("--format", format, "text, csv or json");
  auto* oracle_opt = compare->add_flag("--oracle", oracle, "Validate against the root oracle (default)");
  auto* no_oracle_opt = compare->add_flag("--no-oracle", no_oracle, "Skip the root oracle");
  compare->add_option("--config", config_path, "key=value file of defaults; flags override it");

  std::string fixture_name;
  CLI::App* fixture = app.add_subcommand("fixture", "Reproduce a bundled table or example");
  fixture->add_option("name", fixture_name, "table1..table5, h1..h3, or all")->required();

  std::string roots_poly;
  CLI::App* roots = app.add_subcommand("roots", "Print the zeros found by the root oracle");
  roots->add_option("--poly", roots_poly, "Descending coefficients, comma separated")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParseError;
  }

  try {
    if (*roots) return RunRoots(roots_poly);
    if (*fixture) return RunFixtures(fixture_name);

    CompareOptions options;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw Error(ErrorCode::kParseError, "cannot read config '" + config_path + "'");
      apply_config(in, options);
    }
    if (methods_opt->count() > 0) options.methods = parse_method_list(methods);
    for (const std::string& v : variants) ApplyVariant(v, options);
    if (alpha_opt->count() > 0) options.alpha = alpha;
    if (theta_opt->count() > 0) {
      if (theta_samples < 1) throw Error(ErrorCode::kParseError, "--theta-samples must be >= 1");
      options.theta_samples = theta_samples;
    }
    if (strict_opt->count() > 0) options.strict_mw = true;
    if (format_opt->count() > 0) options.format = parse_format(format);
    if (oracle_opt->count() > 0) options.oracle = true;
    if (no_oracle_opt->count() > 0) options.oracle = false;

    const Polynomial p = parse_polynomial(poly_text);
    const CompareReport report = run_compare(p, options);
    std::cout << format_report(report, options.format);
    if (report.oracle_failed()) std::cerr << "oracle failure: " << report.oracle_error << "\n";
    return exit_code(report);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kParseError:
      case ErrorCode::kUnknownFixture:
      case ErrorCode::kInvalidArgument:
      case ErrorCode::kZeroLeadingCoefficient:
      case ErrorCode::kDegreeTooSmall:
      case ErrorCode::kNonFinite:
        return kExitParseError;
      case ErrorCode::kNoConvergence:
        return kExitOracleFailure;
      default:
        return kExitFixtureFailed;
    }
  }
}
