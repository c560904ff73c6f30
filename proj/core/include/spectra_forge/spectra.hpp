#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spectra_forge/frequency_set.hpp"
#include "spectra_forge/measures.hpp"

namespace spectra_forge {

/// { k/n : 1 <= k < n, Phi_{n / gcd(k, n)} | P_A }.
std::vector<Rational> rational_mask_zeros(std::span<const std::int64_t> digits, std::int64_t n);

/// Zero set of a self-similar transform, Z_mu = U_{j >= 1} n^j (Z + integers).
/// Z holds every rational zero of m_A in (0, 1); a rational lies in Z + integers
/// exactly when its reduced denominator is one of `denominators`.
struct ZeroSetDescriptor {
  std::vector<Rational> base_zeros;
  std::vector<std::int64_t> denominators;
  std::int64_t scale = 2;
};

ZeroSetDescriptor zero_set_descriptor(const SelfSimilarMeasure& mu);

/// Smallest j >= 1 with x / n^j in Z + integers, if any.
std::optional<int> zeroset_level(const ZeroSetDescriptor& desc, const Rational& x);
bool zeroset_membership(const ZeroSetDescriptor& desc, const Rational& x);

enum class PairWitness { cyclotomic, numeric, zero_set };

struct PairEvidence {
  Rational first;
  Rational second;
  PairWitness kind = PairWitness::cyclotomic;
  // cyclotomic: s with Phi_s | P; zero_set: denominator reached at `level`
  std::int64_t divisor = 0;
  int level = 0;
  // numeric: |m(second - first)| and the threshold it was held to
  double magnitude = 0.0;
  double tolerance = 0.0;
};

struct BiZeroCertificate {
  FrequencySet spectrum;
  std::vector<PairEvidence> pairs;
};

struct BiZeroOutcome {
  std::optional<BiZeroCertificate> certificate;
  std::optional<std::pair<Rational, Rational>> offending_pair;
  std::string reason;

  explicit operator bool() const noexcept { return certificate.has_value(); }
};

/// Checks Lambda - Lambda inside Z_mu + {0}. Uniform atomic measures are
/// decided exactly by cyclotomic divisibility, other atomic measures by
/// |m(difference)| < policy.tolerance, self-similar measures exactly by
/// zero-set membership. Requires 0 in Lambda.
BiZeroOutcome is_bizero(const FrequencySet& lambda, const AtomicMeasure& mu, const EvalPolicy& policy = {});
BiZeroOutcome is_bizero(const FrequencySet& lambda, const SelfSimilarMeasure& mu);

/// Uniform weights, #Lambda = #atoms and bi-zero (after translating Lambda to contain 0).
bool spectral_discrete_check(const AtomicMeasure& mu, const FrequencySet& lambda, const EvalPolicy& policy = {});

struct ClassifyResult {
  bool spectral = false;
  std::optional<FrequencySet> spectrum;
  std::string reason;
};

/// {0, c1, c2} with gcd 1: spectral iff c2 = 2 c1 (mod 3).
ClassifyResult classify_3(std::span<const std::int64_t> atoms);

/// {0, c1, c2, c3} with gcd 1: spectral iff one element e is even, the other
/// two o1, o2 are odd and e, |o1 - o2| carry the same power of two. Then with
/// a = gcd(e, |o1 - o2|) the spectrum is {0, 1/2, 1/(2a), (a+1)/(2a)}.
ClassifyResult classify_4(std::span<const std::int64_t> atoms);

enum class DiscreteVerdict { spectral, not_spectral, unknown };

struct UniformClassification {
  DiscreteVerdict verdict = DiscreteVerdict::unknown;
  std::optional<FrequencySet> spectrum;
  // "single atom", "two atoms", "classify_3", "classify_4" or "tiling conditions"
  std::string method;
  std::string reason;
};

/// Spectrality of the uniform measure on the non-negative integer set C
/// (0 in C). The gcd is divided out, 3 and 4 atoms go to the closed-form
/// classifiers, larger sets are spectral when (T1) and (T2) hold and
/// unknown otherwise. The spectrum is returned for C itself.
UniformClassification classify_uniform(std::span<const std::int64_t> atoms);

/// Gamma with Gamma (+) n Gamma (+) ... a spectrum of mu_{A,n}.
struct SpectrumTower {
  FrequencySet gamma;
  std::int64_t scale = 2;
  std::vector<std::string> warnings;
  // the digits were divided by this before building gamma
  std::int64_t divisor = 1;

  /// Gamma (+) n Gamma (+) ... (+) n^{depth-1} Gamma.
  FrequencySet truncation(int depth) const;
};

/// Gamma = n * laba_spectrum(A) with representatives in {-(n-2), ..., n-2}.
/// When g = gcd(A) > 1 and A/g tiles {0..n-1}, Gamma is built from A/g and
/// divided by g (divisor = g); otherwise a gcd warning is attached.
/// Throws StructureError when A has no tiling complement in {0..n-1}.
SpectrumTower selfsimilar_tower(const SelfSimilarMeasure& mu);
FrequencySet selfsimilar_spectrum(const SelfSimilarMeasure& mu, int depth);

struct JpPoint {
  double x = 0.0;
  double q = 0.0;
  double tail_error = 0.0;
};

struct JpScanResult {
  std::vector<JpPoint> points;
  double max_deviation = 0.0;
  // max over the grid of 1 - Q (never negative)
  double max_deficit = 0.0;
  bool bessel_ok = true;
  // atomic measure with a full-size spectrum: the identity Q = 1 is decided
  // up to rounding. Otherwise the scan is evidence at the given depth only.
  bool exact_model = false;
  int depth = 0;

  std::string label() const;
};

/// Q(x) = sum_{lambda} |mu^(x + lambda)|^2 on the grid. Bessel check:
/// Q <= 1 + policy.tolerance + tail_error at every point.
JpScanResult jp_scan(const Measure& mu, const FrequencySet& lambda, std::span<const double> grid,
                     const EvalPolicy& policy = {});

}  // namespace spectra_forge
