#include "zerobound/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "zerobound/error.hpp"

namespace zerobound {

namespace {

std::string_view Trim(std::string_view s) {
  const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\n' && c != '\r'; };
  const auto first = std::find_if(s.begin(), s.end(), not_space);
  const auto last = std::find_if(s.rbegin(), s.rend(), not_space).base();
  return first < last ? std::string_view(first, last) : std::string_view();
}

[[noreturn]] void BadToken(std::string_view token, std::string_view why) {
  throw Error(ErrorCode::kParseError,
              "bad coefficient '" + std::string(token) + "': " + std::string(why));
}

double ParseDecimal(std::string_view text, std::string_view token) {
  if (text.empty()) BadToken(token, "missing number");
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    BadToken(token, "'" + std::string(text) + "' is not a number");
  }
  return value;
}

// Unsigned magnitude: "3", "2.5", "5/4", or empty (meaning 1, as in "i").
double ParseMagnitude(std::string_view text, std::string_view token) {
  if (text.empty()) return 1.0;
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return ParseDecimal(text, token);
  const double num = ParseDecimal(text.substr(0, slash), token);
  const double den = ParseDecimal(text.substr(slash + 1), token);
  if (den == 0.0) BadToken(token, "zero denominator");
  return num / den;
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> lower) : lower_(std::move(lower)) {
  if (lower_.empty()) {
    throw Error(ErrorCode::kDegreeTooSmall, "polynomial degree must be at least 1");
  }
  for (const Complex& z : lower_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::kNonFinite, "polynomial coefficient is NaN or infinite");
    }
  }
}

const Complex& Polynomial::a(std::size_t k) const {
  if (k < 1 || k > lower_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "coefficient index " + std::to_string(k) + " outside 1.." +
                    std::to_string(lower_.size()));
  }
  return lower_[k - 1];
}

Complex Polynomial::evaluate(Complex z) const {
  Complex acc = 1.0;
  for (auto it = lower_.rbegin(); it != lower_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double Polynomial::evaluation_scale(Complex z) const {
  const double r = std::abs(z);
  double acc = 1.0;
  for (auto it = lower_.rbegin(); it != lower_.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

std::vector<Complex> Polynomial::descending() const {
  std::vector<Complex> out;
  out.reserve(lower_.size() + 1);
  out.push_back(1.0);
  out.insert(out.end(), lower_.rbegin(), lower_.rend());
  return out;
}

double Polynomial::max_abs_coefficient() const {
  double best = 0.0;
  for (const Complex& z : lower_) best = std::max(best, std::abs(z));
  return best;
}

Polynomial make_monic(std::span<const Complex> coeffs_desc) {
  if (coeffs_desc.size() < 2) {
    throw Error(ErrorCode::kDegreeTooSmall, "need at least two coefficients");
  }
  const Complex leading = coeffs_desc.front();
  if (leading == Complex{}) {
    throw Error(ErrorCode::kZeroLeadingCoefficient, "leading coefficient is zero");
  }
  std::vector<Complex> lower(coeffs_desc.size() - 1);
  for (std::size_t i = 1; i < coeffs_desc.size(); ++i) {
    lower[coeffs_desc.size() - 1 - i] = coeffs_desc[i] / leading;
  }
  return Polynomial(std::move(lower));
}

std::pair<Polynomial, bool> odd_reduce(const Polynomial& p) {
  if (p.degree() % 2 == 1 && p.degree() > 1 && p.a(1) == Complex{}) {
    std::vector<Complex> lower(p.lower().begin() + 1, p.lower().end());
    return {Polynomial(std::move(lower)), true};
  }
  return {p, false};
}

Complex parse_complex(std::string_view raw) {
  const std::string_view token = Trim(raw);
  if (token.empty()) BadToken(raw, "empty coefficient");

  // Split into at most two signed terms; a sign directly after an exponent
  // marker belongs to the number.
  std::vector<std::string_view> terms;
  std::size_t start = 0;
  for (std::size_t i = 1; i < token.size(); ++i) {
    const char c = token[i];
    if ((c == '+' || c == '-') && token[i - 1] != 'e' && token[i - 1] != 'E') {
      terms.push_back(token.substr(start, i - start));
      start = i;
    }
  }
  terms.push_back(token.substr(start));
  if (terms.size() > 2) BadToken(token, "too many terms");

  Complex value{};
  bool seen_real = false;
  bool seen_imag = false;
  for (std::string_view term : terms) {
    term = Trim(term);
    double sign = 1.0;
    if (!term.empty() && (term.front() == '+' || term.front() == '-')) {
      sign = term.front() == '-' ? -1.0 : 1.0;
      term = Trim(term.substr(1));
    }
    if (term.empty()) BadToken(token, "dangling sign");
    if (term.back() == 'i') {
      if (seen_imag) BadToken(token, "two imaginary parts");
      seen_imag = true;
      term.remove_suffix(1);
      value += Complex(0.0, sign * ParseMagnitude(Trim(term), token));
    } else {
      if (seen_real) BadToken(token, "two real parts");
      seen_real = true;
      value += Complex(sign * ParseMagnitude(term, token), 0.0);
    }
  }
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    BadToken(token, "not finite");
  }
  return value;
}

Polynomial parse_polynomial(std::string_view text) {
  std::vector<Complex> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                           : comma - start);
    coeffs.push_back(parse_complex(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (coeffs.size() < 2) {
    throw Error(ErrorCode::kParseError,
                "polynomial '" + std::string(text) + "' needs at least two coefficients");
  }
  if (coeffs.front() == Complex{}) {
    throw Error(ErrorCode::kParseError, "leading coefficient is zero");
  }
  return make_monic(coeffs);
}

std::string to_string(const Polynomial& p) {
  std::string out;
  char buf[64];
  for (const Complex& c : p.descending()) {
    if (!out.empty()) out += ", ";
    if (c.imag() == 0.0) {
      std::snprintf(buf, sizeof buf, "%.10g", c.real());
    } else if (c.real() == 0.0) {
      std::snprintf(buf, sizeof buf, "%.10gi", c.imag());
    } else {
      std::snprintf(buf, sizeof buf, "%.10g%+.10gi", c.real(), c.imag());
    }
    out += buf;
  }
  return out;
}

}  // namespace zerobound
