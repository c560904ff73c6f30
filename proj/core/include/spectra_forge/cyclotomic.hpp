#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "spectra_forge/frequency_set.hpp"
#include "spectra_forge/number_theory.hpp"
#include "spectra_forge/polynomial.hpp"

// Exact integer-polynomial machinery for finite digit sets A of non-negative
// integers: digit polynomials P_A(x) = sum_{a in A} x^a, their cyclotomic
// divisors, the tiling conditions (T1)/(T2), the explicit spectrum built
// from the prime-power divisors, and tilings of {0, ..., n-1}.

namespace spectra_forge {

/// P_A(x); digits must be non-negative and distinct.
IntPolynomial digit_polynomial(std::span<const std::int64_t> digits);

/// Phi_s via the Moebius product prod_{d|s} (x^d - 1)^{mu(s/d)}.
IntPolynomial cyclotomic_poly(std::int64_t s);

/// Phi_s | P_A, decided by exact remainder. Equivalent to m_A(1/s) = 0 for s >= 2.
bool divides_cyclotomic(std::span<const std::int64_t> digits, std::int64_t s);

/// Every s >= 2 with Phi_s | P_A (the full set of cyclotomic divisors).
std::vector<std::int64_t> cyclotomic_divisors(std::span<const std::int64_t> digits);

struct PrimePower {
  std::int64_t prime;
  int exponent;
  std::int64_t value() const { return ipow(prime, exponent); }
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Sorted (by value) set of prime powers p^alpha > 1.
class PrimePowerSet {
public:
  PrimePowerSet() = default;
  /// Throws PreconditionError on duplicates or non prime powers.
  explicit PrimePowerSet(std::vector<PrimePower> elements);
  static PrimePowerSet from_values(std::span<const std::int64_t> values);

  const std::vector<PrimePower>& elements() const noexcept { return elements_; }
  std::vector<std::int64_t> values() const;
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(std::int64_t value) const;
  /// Distinct primes appearing, ascending.
  std::vector<std::int64_t> primes() const;

  friend bool operator==(const PrimePowerSet&, const PrimePowerSet&) = default;

private:
  std::vector<PrimePower> elements_;
};

/// S_A = { p^alpha : Phi_{p^alpha} | P_A }, searched over phi(p^alpha) <= max A.
PrimePowerSet compute_SA(std::span<const std::int64_t> digits);

/// #A = prod_{s in S_A} Phi_s(1) = prod p.
bool check_T1(std::span<const std::int64_t> digits);
bool check_T1(std::span<const std::int64_t> digits, const PrimePowerSet& sa);

/// For every choice of powers of two or more pairwise distinct primes from
/// S_A, Phi_{product} | P_A. Vacuous when S_A involves a single prime.
bool check_T2(std::span<const std::int64_t> digits);
bool check_T2(std::span<const std::int64_t> digits, const PrimePowerSet& sa);
/// The first product s_1...s_k that violates (T2), if any.
std::optional<std::int64_t> find_T2_violation(std::span<const std::int64_t> digits, const PrimePowerSet& sa);

/// { sum_{s in S_A} k_s / s : 0 <= k_s < p for s = p^alpha }, reduced mod 1.
/// Throws PreconditionError naming the failing condition unless (T1) and (T2) hold.
FrequencySet laba_spectrum(std::span<const std::int64_t> digits);

/// #Lambda = #A and m_A(lambda - lambda') = 0 for every distinct pair, decided
/// exactly through the reduced denominators of the differences.
bool verify_orthogonal_spectrum(std::span<const std::int64_t> digits, const FrequencySet& spectrum);

/// B with A (+) B = {0, ..., n-1}. Requires 0 in A and A inside {0..n-1}.
/// Greedy: the smallest uncovered integer must be the next element of B.
std::optional<std::vector<std::int64_t>> tiling_complement(std::span<const std::int64_t> a,
                                                           std::int64_t n);

/// Every element of {0..n-1} is a + b in exactly one way (and nothing else is).
bool verify_tiling(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::int64_t n);

/// A = m A' + {0..m-1}, B = m B' with A' (+) B' = {0..n/m - 1}.
/// If 1 lies in B instead of A, the roles are swapped (roles_swapped = true):
/// then B = m B' + {0..m-1} and A = m A'.
struct LongDecomposition {
  std::int64_t m = 0;
  std::vector<std::int64_t> a_prime;
  std::vector<std::int64_t> b_prime;
  bool roles_swapped = false;
};

/// Throws PreconditionError when A (+) B != {0..n-1} or 1 lies in neither
/// set, and StructureError naming the equation that fails otherwise.
LongDecomposition long_decomposition(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                                     std::int64_t n);

/// S_{mA} = { p^{alpha + gamma} : p^alpha in S_A, gamma = v_p(m) }.
PrimePowerSet scale_SA(const PrimePowerSet& sa, std::int64_t m);
PrimePowerSet scale_SA(std::span<const std::int64_t> digits, std::int64_t m);

struct TileCertificate {
  std::vector<std::int64_t> set;
  std::int64_t modulus = 0;
  std::optional<std::vector<std::int64_t>> complement;
  bool t1 = false;
  bool t2 = false;
  PrimePowerSet sa;
  std::optional<FrequencySet> spectrum;
  // (T1)/(T2) of the complement, when one exists
  std::optional<bool> complement_t1;
  std::optional<bool> complement_t2;
};

/// Tiling complement, S_A, (T1), (T2) and, when both hold, the verified spectrum.
TileCertificate analyze_tile(std::span<const std::int64_t> a, std::int64_t n);

nlohmann::json to_json(const PrimePowerSet& s);
nlohmann::json to_json(const TileCertificate& c);

}  // namespace spectra_forge
