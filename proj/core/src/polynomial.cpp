#include "spectra_forge/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "spectra_forge/errors.hpp"

namespace spectra_forge {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::int64_t degree, BigInt coefficient) {
  if (degree < 0) throw PreconditionError("monomial: negative degree");
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
  c.back() = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::int64_t n) {
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c.front() = -1;
  c.back() += 1;
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::coefficient(std::int64_t k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const BigInt& IntPolynomial::leading() const {
  if (is_zero()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::compose_power(std::int64_t k) const {
  if (k < 1) throw PreconditionError("compose_power: k must be >= 1");
  if (is_zero()) return {};
  std::vector<BigInt> c(static_cast<std::size_t>(degree() * k) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * static_cast<std::size_t>(k)] = coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::int64_t k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& dividend,
                                               const IntPolynomial& divisor) {
  if (divisor.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<BigInt> rem = dividend.coefficients();
  const std::int64_t dd = divisor.degree();
  const BigInt& lead = divisor.leading();
  const auto& dc = divisor.coefficients();
  if (dividend.degree() < dd) return {IntPolynomial{}, dividend};
  std::vector<BigInt> quot(static_cast<std::size_t>(dividend.degree() - dd) + 1);
  for (std::int64_t k = dividend.degree(); k >= dd; --k) {
    BigInt& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (top % lead != 0) throw PreconditionError("divmod: inexact integer division");
    const BigInt factor = top / lead;
    const std::size_t shift = static_cast<std::size_t>(k - dd);
    quot[shift] = factor;
    for (std::size_t i = 0; i < dc.size(); ++i) rem[shift + i] -= factor * dc[i];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

bool divides(const IntPolynomial& divisor, const IntPolynomial& dividend) {
  return divmod(dividend, divisor).second.is_zero();
}

}  // namespace spectra_forge
