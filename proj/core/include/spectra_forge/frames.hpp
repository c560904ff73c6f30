#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spectra_forge/frequency_set.hpp"
#include "spectra_forge/measures.hpp"

namespace spectra_forge {

/// Exponentials e^{2 pi i lambda x}, lambda in the frequency set, viewed in
/// L^2 of a finite atomic measure.
struct ExponentialSystem {
  AtomicMeasure measure;
  FrequencySet frequencies;
};

/// Constants A <= B of A||f||^2 <= sum |<f, e_lambda>|^2 <= B||f||^2.
struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool optimal = false;

  double condition_number() const {
    return lower > 0.0 ? upper / lower : std::numeric_limits<double>::infinity();
  }
};

inline constexpr double kDefaultRieszTolerance = 1e-9;

/// W V^* V W with V[lambda, c] = e^{-2 pi i lambda c}, W = diag(sqrt(p_c)).
/// Its extreme eigenvalues are the optimal frame bounds of the system.
Eigen::MatrixXcd frame_operator(const ExponentialSystem& sys);

/// Optimal bounds from a Hermitian eigen-decomposition of the n x n frame
/// operator (n = number of atoms). lower = 0 means "not a frame".
FrameBounds frame_bounds(const ExponentialSystem& sys);

/// m == n and lower > relative_tolerance * upper.
bool is_riesz_spectrum(const ExponentialSystem& sys, double relative_tolerance = kDefaultRieszTolerance);

/// det[e^{2 pi i lambda_i c_j}] for a square system.
std::complex<double> exponential_determinant(std::span<const std::int64_t> atoms, const FrequencySet& freqs);

enum class SearchStrategy { deterministic, random };

struct RieszSearchOptions {
  SearchStrategy strategy = SearchStrategy::deterministic;
  std::uint64_t seed = 0;
  std::int64_t max_denominator = 64;
  int max_attempts = 1000;
  double determinant_tolerance = 1e-9;
};

/// A rational Riesz spectrum for the uniform measure on the integer set C.
/// Deterministic: {0, 1/N, ..., (n-1)/N} with N = max(C) + 1, a Vandermonde
/// system in the distinct nodes e^{2 pi i c / N}. Random: 0 plus rationals
/// k/d with d <= max_denominator, redrawn until |det| exceeds the tolerance.
/// Always validated with is_riesz_spectrum. Throws RetryBudgetExceeded.
FrequencySet find_riesz_spectrum(std::span<const std::int64_t> atoms, const RieszSearchOptions& options = {});

/// Empirical min/max of sum |<f,e_lambda>|^2 / ||f||^2 over random unit vectors.
struct FrameRatioSample {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  int samples = 0;
};
FrameRatioSample sample_frame_ratios(const ExponentialSystem& sys, int samples, std::uint64_t seed);

struct DensitySample {
  double h = 0.0;
  double density = 0.0;
};

/// Finite-window diagnostic for the lower Beurling density: for each h, the
/// minimum over window positions [t, t+h) inside [lo, hi] of the point count,
/// divided by h. The minimum is taken over every position where the count
/// can change, so it is the exact infimum for the finite data.
/// Requires 0 < h <= (hi - lo) / 4.
std::vector<DensitySample> beurling_lower_density_proxy(std::span<const double> points, double lo, double hi,
                                                        std::span<const double> h_values);

}  // namespace spectra_forge
