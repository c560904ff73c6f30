#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "spectra_forge/rational.hpp"

namespace spectra_forge {

/// Finite probability measure sum_c p_c delta_c with exact rational atoms
/// and weights. Atoms are kept sorted ascending and pairwise distinct, and
/// the weights are positive and sum to exactly 1.
class AtomicMeasure {
public:
  /// Pairs are sorted by atom. Throws PreconditionError on duplicates,
  /// length mismatch, non-positive weights or weights not summing to 1.
  AtomicMeasure(std::vector<Rational> atoms, std::vector<Rational> weights);

  static AtomicMeasure uniform(std::vector<Rational> atoms);

  /// Integer discrete measure: atoms are non-negative integers and 0 is one of them.
  static AtomicMeasure integer_discrete(std::span<const std::int64_t> atoms,
                                        std::vector<Rational> weights);
  static AtomicMeasure integer_uniform(std::span<const std::int64_t> atoms);

  const std::vector<Rational>& atoms() const noexcept { return atoms_; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  bool is_uniform() const;
  bool has_integer_atoms() const;
  /// Throws PreconditionError if some atom is not an integer.
  std::vector<std::int64_t> integer_atoms() const;

  /// Push-forward under x -> factor * x.
  AtomicMeasure dilated(const Rational& factor) const;

  // double copies for the floating evaluation paths
  std::span<const double> atoms_double() const noexcept { return atoms_d_; }
  std::span<const double> weights_double() const noexcept { return weights_d_; }

  friend bool operator==(const AtomicMeasure& a, const AtomicMeasure& b) {
    return a.atoms_ == b.atoms_ && a.weights_ == b.weights_;
  }

private:
  std::vector<Rational> atoms_;
  std::vector<Rational> weights_;
  std::vector<double> atoms_d_;
  std::vector<double> weights_d_;
};

/// mu = (1/#A) sum_{a in A} mu(n . - a): uniform self-similar measure with
/// digit set A (non-negative, contains 0, at most n digits) and scale n >= 2.
class SelfSimilarMeasure {
public:
  SelfSimilarMeasure(std::vector<std::int64_t> digits, std::int64_t scale);

  const std::vector<std::int64_t>& digits() const noexcept { return digits_; }
  std::int64_t scale() const noexcept { return scale_; }
  std::int64_t max_digit() const noexcept { return digits_.back(); }

  friend bool operator==(const SelfSimilarMeasure&, const SelfSimilarMeasure&) = default;

private:
  std::vector<std::int64_t> digits_;
  std::int64_t scale_;
};

/// Normalized Lebesgue measure on [0, 1].
struct UnitIntervalLebesgue {
  friend bool operator==(const UnitIntervalLebesgue&, const UnitIntervalLebesgue&) = default;
};

using ContinuousFactor = std::variant<UnitIntervalLebesgue, SelfSimilarMeasure>;

/// mu = eta_q * nu where eta_q is the discrete factor with atoms dilated by q
/// and nu is supported in [0, 1].
class ConvolutionMeasure {
public:
  ConvolutionMeasure(AtomicMeasure discrete, std::int64_t q, ContinuousFactor continuous);

  const AtomicMeasure& discrete_factor() const noexcept { return discrete_; }
  std::int64_t dilation() const noexcept { return q_; }
  const ContinuousFactor& continuous_factor() const noexcept { return continuous_; }

  /// eta_q: atoms q*c with the original weights.
  AtomicMeasure dilated_discrete() const;

  friend bool operator==(const ConvolutionMeasure&, const ConvolutionMeasure&) = default;

private:
  AtomicMeasure discrete_;
  std::int64_t q_;
  ContinuousFactor continuous_;
};

using Measure = std::variant<AtomicMeasure, SelfSimilarMeasure, ConvolutionMeasure>;

/// Truncation control for infinite products.
struct EvalPolicy {
  int truncation_depth = 40;
  double tolerance = 1e-10;

  /// Throws PreconditionError unless depth >= 1 and tolerance > 0.
  void validate() const;
};

/// A transform value together with a certified bound on |tail - 1|, where
/// tail is the omitted factor of the infinite product. The exact value v
/// satisfies |v - value| <= |value| * error_bound.
struct TransformValue {
  std::complex<double> value;
  double error_bound = 0.0;
};

/// sum_c p_c e^{2 pi i c x}; the product c*x is formed exactly.
std::complex<double> mask_eval(const AtomicMeasure& m, const Rational& x);
std::complex<double> mask_eval(const AtomicMeasure& m, double x);

/// Uniform mask (1/#A) sum_a e^{2 pi i a x} of a digit set.
std::complex<double> digit_mask(std::span<const std::int64_t> digits, double x);
std::complex<double> digit_mask(std::span<const std::int64_t> digits, const Rational& x);

/// prod_{j=1}^{J} m_A(xi / n^j) with the Lipschitz tail bound.
TransformValue ft_selfsimilar(const SelfSimilarMeasure& mu, double xi, const EvalPolicy& policy = {});
TransformValue ft_selfsimilar(const SelfSimilarMeasure& mu, const Rational& xi,
                              const EvalPolicy& policy = {});

/// (e^{2 pi i xi} - 1) / (2 pi i xi), exact zero at nonzero integers for the rational overload.
std::complex<double> ft_lebesgue(double xi);
std::complex<double> ft_lebesgue(const Rational& xi);

TransformValue ft_continuous(const ContinuousFactor& nu, double xi, const EvalPolicy& policy = {});
TransformValue ft_continuous(const ContinuousFactor& nu, const Rational& xi,
                             const EvalPolicy& policy = {});

/// m_{qC,P}(xi) * nu^(xi); the error bound is the continuous factor's.
TransformValue ft_convolution(const ConvolutionMeasure& mu, double xi, const EvalPolicy& policy = {});
TransformValue ft_convolution(const ConvolutionMeasure& mu, const Rational& xi,
                              const EvalPolicy& policy = {});

/// Fourier transform of any supported measure; atomic measures are exact (bound 0).
TransformValue fourier_transform(const Measure& mu, double xi, const EvalPolicy& policy = {});
TransformValue fourier_transform(const Measure& mu, const Rational& xi, const EvalPolicy& policy = {});

inline constexpr std::size_t kDefaultAtomCap = std::size_t{1} << 20;

/// The depth-J iterate of the self-similar identity: the uniform measure on
/// digit expansions sum_{j<=J} a_j n^{-j}. Coinciding expansions are merged
/// with their weights added. Throws SizeCapExceeded when (#A)^J > cap.
AtomicMeasure approximate_atoms(const SelfSimilarMeasure& mu, int depth,
                                std::size_t cap = kDefaultAtomCap);

}  // namespace spectra_forge
