#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace spectra_forge {

struct PrimeFactor {
  std::int64_t prime;
  int exponent;
  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Trial-division factorization, primes ascending. factorize(1) is empty.
std::vector<PrimeFactor> factorize(std::int64_t n);

bool is_prime(std::int64_t n);

/// (p, alpha) when n = p^alpha with alpha >= 1, otherwise nullopt.
std::optional<PrimeFactor> as_prime_power(std::int64_t n);

std::int64_t euler_totient(std::int64_t n);

/// Moebius function mu(n).
int moebius(std::int64_t n);

/// All positive divisors of n, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Largest j with p^j | n (n != 0).
int p_adic_valuation(std::int64_t n, std::int64_t p);

/// gcd of a set (0 for the empty set or all zeros).
std::int64_t gcd_of(std::span<const std::int64_t> values);

std::int64_t ipow(std::int64_t base, int exponent);

}  // namespace spectra_forge
