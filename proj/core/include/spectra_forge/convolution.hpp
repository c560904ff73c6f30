#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "spectra_forge/certificate.hpp"
#include "spectra_forge/frames.hpp"
#include "spectra_forge/frequency_set.hpp"
#include "spectra_forge/measures.hpp"
#include "spectra_forge/spectra.hpp"

namespace spectra_forge {

/// spacing * Z, truncated at depth J to {-J, ..., J} * spacing.
struct LatticeGenerator {
  Rational spacing{1};
};

/// Symbolic description of the continuous factor's spectrum Gamma.
using SpectrumGenerator = std::variant<LatticeGenerator, SpectrumTower>;

FrequencySet truncate(const SpectrumGenerator& gen, int depth);
nlohmann::json to_json(const SpectrumGenerator& gen);

/// The natural spectrum of nu: Z for Lebesgue, the digit tower for mu_{A,n}.
SpectrumGenerator default_generator(const ContinuousFactor& nu);

struct ConvolutionSpectrum {
  std::int64_t q = 1;
  FrequencySet discrete_part;
  SpectrumGenerator generator;
  int depth = 1;
  FrequencySet assembled;
  // M = [e^{2 pi i a s}], a in qC, s in S
  Eigen::MatrixXcd witness;
  std::complex<double> witness_determinant;
};

nlohmann::json to_json(const ConvolutionSpectrum& cs);

/// S = find_riesz_spectrum(qC) together with S (+) Gamma_J. Throws
/// StructureError when q Gamma_J is not inside the integers.
ConvolutionSpectrum riesz_spectrum_convolution(const AtomicMeasure& eta, std::int64_t q, const SpectrumGenerator& gamma,
                                               int depth, const RieszSearchOptions& options = {});

/// q Z_nu inside the integers, decided from the zero-set descriptor: every
/// base denominator s must divide q n. Always true for Lebesgue.
bool zero_set_hypothesis(const ContinuousFactor& nu, std::int64_t q);

struct OrthogonalityCounts {
  // pairs whose discrete mask vanishes, and pairs left to the continuous factor
  std::size_t discrete = 0;
  std::size_t continuous = 0;
};

struct ConvolutionOrthogonality {
  FrequencySet spectrum;
  OrthogonalityCounts counts;
};

/// S (+) Gamma_J with every pairwise difference certified exactly as a zero
/// of m_{qC} or of nu^. Throws PreconditionError naming the failed
/// precondition: uniform weights, #S = #C, S bi-zero for qC, q Z_nu in Z,
/// Gamma_J orthogonal for nu.
ConvolutionOrthogonality spectrum_convolution(const ConvolutionMeasure& mu, const FrequencySet& discrete_part,
                                              const SpectrumGenerator& gamma, int depth);

struct FactoredSpectrum {
  FrequencySet discrete_part;
  // (s_j, Lambda_j) with Lambda = U (s_j + Lambda_j)
  std::vector<std::pair<Rational, FrequencySet>> classes;
};

/// S = { q^{-1} frac(q lambda) } and Lambda_j = { q^{-1} floor(q lambda) } per class.
FactoredSpectrum factor_spectrum(const FrequencySet& lambda, std::int64_t q);

/// Spectrality verdict for eta_q * nu by factorization: not spectral when the
/// weights of eta are not uniform, otherwise decided by the discrete
/// classifiers. Throws PreconditionError when q Z_nu is not inside Z.
Certificate nonspectral_certificate(const ConvolutionMeasure& mu, int depth = 3);

struct GramSection {
  int depth = 0;
  std::size_t size = 0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
};

struct ClosedInterval {
  Rational lo;
  Rational hi;
};

struct IntervalUnionSpectrum {
  BigInt r;
  BigInt s;
  std::vector<std::int64_t> offsets;
  // R-spectrum of the uniform measure on the offsets; F = [0,1] + offsets has
  // S (+) Z, and E = (F - s) / r has r (S (+) Z)
  FrequencySet discrete_part;
  std::vector<GramSection> sections;
  bool validated = false;
};

/// rE + s = [0, 1] + A with A the unit offsets, 0 in A. The finite sections
/// r(S (+) {-K..K}) are checked against the normalized Lebesgue measure on E
/// for K in `truncations`. Throws PreconditionError on overlapping intervals.
IntervalUnionSpectrum interval_union_rspectrum(std::span<const ClosedInterval> intervals,
                                               std::span<const int> truncations = {},
                                               double relative_tolerance = kDefaultRieszTolerance);

nlohmann::json to_json(const IntervalUnionSpectrum& iu);

struct RieszEvidence {
  FrequencySet discrete_part;
  std::vector<GramSection> sections;
  int atom_extra_depth = 2;
  // smallest / largest eigenvalue over all sections
  double epsilon0 = 0.0;
  double largest = 0.0;
  bool floor_ok = false;
  bool stable = false;
};

/// Gram matrices of S (+) Gamma_J against eta_q * nu_{J + atom_extra_depth},
/// nu_K the depth-K atom approximation (exact transform for Lebesgue).
/// floor_ok: epsilon0 > 0.01 * largest; stable: the smallest eigenvalues
/// agree within a factor of 2 across depths.
RieszEvidence riesz_evidence(const ConvolutionMeasure& mu, std::span<const int> depths, int atom_extra_depth = 2,
                             const RieszSearchOptions& options = {});

nlohmann::json to_json(const RieszEvidence& ev);

}  // namespace spectra_forge
