#include "spectra_forge/rational.hpp"

#include <cmath>
#include <numbers>

#include "spectra_forge/errors.hpp"

namespace spectra_forge {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  std::string_view body = digits;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (body.empty()) throw ParseError("malformed rational '" + std::string(whole) + "'");
  for (char c : body) {
    if (c < '0' || c > '9') throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  BigInt value{std::string(body)};
  if (digits.front() == '-') value = -value;
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty rational");
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, s));
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = s.substr(slash + 1);
  if (!den.empty() && (den.front() == '-' || den.front() == '+')) {
    throw ParseError("malformed rational '" + std::string(s) + "': signed denominator");
  }
  const BigInt p = parse_integer(num, s);
  const BigInt q = parse_integer(den, s);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  return Rational(p, q);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  for (const Rational& r : parse_rational_list(text)) {
    if (!is_integer(r)) throw ParseError("expected integer, got '" + to_string(r) + "'");
    const BigInt v = numerator_of(r);
    if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN)) throw ParseError("integer out of range");
    out.push_back(static_cast<std::int64_t>(v));
  }
  return out;
}

std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

std::vector<std::string> to_strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

BigInt floor_of(const Rational& r) {
  const BigInt n = numerator_of(r);
  const BigInt d = denominator_of(r);
  BigInt q = n / d;
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

Rational frac_of(const Rational& r) { return r - Rational(floor_of(r)); }

bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::complex<double> unit_exp(const Rational& t) {
  const Rational f = frac_of(t);
  if (f == 0) return {1.0, 0.0};
  const BigInt d = denominator_of(f);
  if (d == 2) return {-1.0, 0.0};
  if (d == 4) return numerator_of(f) == 1 ? std::complex<double>{0.0, 1.0}
                                          : std::complex<double>{0.0, -1.0};
  // symmetric reduction keeps |angle| <= pi
  const double x = f > Rational(1, 2) ? to_double(f - 1) : to_double(f);
  const double angle = 2.0 * std::numbers::pi * x;
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> unit_exp(double t) {
  double f = t - std::floor(t);
  if (f > 0.5) f -= 1.0;
  const double angle = 2.0 * std::numbers::pi * f;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace spectra_forge
