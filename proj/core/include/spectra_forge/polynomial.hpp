#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spectra_forge/rational.hpp"

namespace spectra_forge {

/// Dense polynomial with arbitrary-precision integer coefficients,
/// coefficient index = degree. Trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients and every other value has a nonzero
/// leading coefficient.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial monomial(std::int64_t degree, BigInt coefficient = 1);
  /// x^n - 1
  static IntPolynomial x_pow_minus_one(std::int64_t n);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt coefficient(std::int64_t k) const;
  const BigInt& leading() const;

  BigInt evaluate(const BigInt& x) const;
  /// p(x^k)
  IntPolynomial compose_power(std::int64_t k) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string() const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Quotient and remainder of exact integer long division. The divisor's
/// leading coefficient must divide every intermediate leading term (always
/// true for monic or anti-monic divisors such as cyclotomic polynomials);
/// otherwise PreconditionError.
std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& dividend,
                                               const IntPolynomial& divisor);

bool divides(const IntPolynomial& divisor, const IntPolynomial& dividend);

}  // namespace spectra_forge
