#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spectra_forge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p" or "-p/q" (decimal integers, q != 0). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals, e.g. "0,1/3,2/3". Empty items rejected.
std::vector<Rational> parse_rational_list(std::string_view text);

/// Comma separated list of (signed) 64-bit integers.
std::vector<std::int64_t> parse_int_list(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, "p" when the value is an integer.
std::string to_string(const Rational& r);

std::vector<std::string> to_strings(const std::vector<Rational>& values);

BigInt numerator_of(const Rational& r);
BigInt denominator_of(const Rational& r);

/// Largest integer <= r.
BigInt floor_of(const Rational& r);

/// r - floor(r), always in [0, 1).
Rational frac_of(const Rational& r);

bool is_integer(const Rational& r);

double to_double(const Rational& r);

/// e^{2 pi i t} for exact rational t. The argument is reduced mod 1 exactly;
/// multiples of 1/4 return exact values, everything else goes through
/// cos/sin of the reduced argument.
std::complex<double> unit_exp(const Rational& t);

/// e^{2 pi i t} for a real t, reduced mod 1 before the trigonometric call.
std::complex<double> unit_exp(double t);

}  // namespace spectra_forge
