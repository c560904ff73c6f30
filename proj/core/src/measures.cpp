#include "spectra_forge/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "spectra_forge/errors.hpp"

namespace spectra_forge {

AtomicMeasure::AtomicMeasure(std::vector<Rational> atoms, std::vector<Rational> weights) {
  if (atoms.empty()) throw PreconditionError("atomic measure needs at least one atom");
  if (atoms.size() != weights.size()) {
    throw PreconditionError("atomic measure: atoms and weights differ in length");
  }
  std::vector<std::size_t> order(atoms.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return atoms[i] < atoms[j]; });
  Rational total = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto i = order[k];
    if (k > 0 && atoms[i] == atoms_.back()) {
      throw PreconditionError("atomic measure: duplicate atom " + to_string(atoms[i]));
    }
    if (weights[i] <= 0) throw PreconditionError("atomic measure: weights must be positive");
    total += weights[i];
    atoms_.push_back(atoms[i]);
    weights_.push_back(weights[i]);
  }
  if (total != 1) throw PreconditionError("atomic measure: weights sum to " + to_string(total) + ", not 1");
  atoms_d_.reserve(atoms_.size());
  weights_d_.reserve(atoms_.size());
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    atoms_d_.push_back(to_double(atoms_[k]));
    weights_d_.push_back(to_double(weights_[k]));
  }
}

AtomicMeasure AtomicMeasure::uniform(std::vector<Rational> atoms) {
  const Rational w(1, static_cast<long long>(atoms.size() == 0 ? 1 : atoms.size()));
  std::vector<Rational> weights(atoms.size(), w);
  return AtomicMeasure(std::move(atoms), std::move(weights));
}

AtomicMeasure AtomicMeasure::integer_discrete(std::span<const std::int64_t> atoms,
                                              std::vector<Rational> weights) {
  bool has_zero = false;
  std::vector<Rational> r;
  r.reserve(atoms.size());
  for (auto a : atoms) {
    if (a < 0) throw PreconditionError("integer discrete measure: atoms must be non-negative");
    has_zero = has_zero || a == 0;
    r.emplace_back(a);
  }
  if (!has_zero) throw PreconditionError("integer discrete measure: 0 must be an atom");
  return AtomicMeasure(std::move(r), std::move(weights));
}

AtomicMeasure AtomicMeasure::integer_uniform(std::span<const std::int64_t> atoms) {
  const Rational w(1, static_cast<long long>(atoms.size() == 0 ? 1 : atoms.size()));
  return integer_discrete(atoms, std::vector<Rational>(atoms.size(), w));
}

bool AtomicMeasure::is_uniform() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [&](const Rational& w) { return w == weights_.front(); });
}

bool AtomicMeasure::has_integer_atoms() const {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const Rational& a) { return is_integer(a); });
}

std::vector<std::int64_t> AtomicMeasure::integer_atoms() const {
  std::vector<std::int64_t> out;
  out.reserve(atoms_.size());
  for (const auto& a : atoms_) {
    if (!is_integer(a)) throw PreconditionError("atom " + to_string(a) + " is not an integer");
    out.push_back(static_cast<std::int64_t>(numerator_of(a)));
  }
  return out;
}

AtomicMeasure AtomicMeasure::dilated(const Rational& factor) const {
  if (factor == 0) throw PreconditionError("dilation factor must be nonzero");
  std::vector<Rational> atoms;
  atoms.reserve(atoms_.size());
  for (const auto& a : atoms_) atoms.push_back(a * factor);
  return AtomicMeasure(std::move(atoms), weights_);
}

SelfSimilarMeasure::SelfSimilarMeasure(std::vector<std::int64_t> digits, std::int64_t scale)
    : digits_(std::move(digits)), scale_(scale) {
  if (scale_ < 2) throw PreconditionError("self-similar measure: scale must be >= 2");
  std::sort(digits_.begin(), digits_.end());
  if (digits_.empty() || digits_.front() != 0) {
    throw PreconditionError("self-similar measure: digit set must contain 0");
  }
  if (std::adjacent_find(digits_.begin(), digits_.end()) != digits_.end()) {
    throw PreconditionError("self-similar measure: duplicate digit");
  }
  if (static_cast<std::int64_t>(digits_.size()) > scale_) {
    throw PreconditionError("self-similar measure: more digits than the scale");
  }
}

ConvolutionMeasure::ConvolutionMeasure(AtomicMeasure discrete, std::int64_t q, ContinuousFactor continuous)
    : discrete_(std::move(discrete)), q_(q), continuous_(std::move(continuous)) {
  if (q_ < 1) throw PreconditionError("convolution measure: q must be a positive integer");
  for (const auto& a : discrete_.atoms()) {
    if (!is_integer(a) || a < 0) {
      throw PreconditionError("convolution measure: discrete factor must live on non-negative integers");
    }
  }
  if (const auto* ss = std::get_if<SelfSimilarMeasure>(&continuous_)) {
    if (ss->max_digit() > ss->scale() - 1) {
      throw PreconditionError("convolution measure: continuous factor not supported in [0,1]");
    }
  }
}

AtomicMeasure ConvolutionMeasure::dilated_discrete() const { return discrete_.dilated(Rational(q_)); }

void EvalPolicy::validate() const {
  if (truncation_depth < 1) throw PreconditionError("policy: truncation depth must be >= 1");
  if (!(tolerance > 0.0)) throw PreconditionError("policy: tolerance must be positive");
}

std::complex<double> mask_eval(const AtomicMeasure& m, const Rational& x) {
  std::complex<double> acc{0.0, 0.0};
  const auto& atoms = m.atoms();
  const auto w = m.weights_double();
  for (std::size_t k = 0; k < atoms.size(); ++k) acc += w[k] * unit_exp(atoms[k] * x);
  return acc;
}

std::complex<double> mask_eval(const AtomicMeasure& m, double x) {
  std::complex<double> acc{0.0, 0.0};
  const auto a = m.atoms_double();
  const auto w = m.weights_double();
  for (std::size_t k = 0; k < a.size(); ++k) acc += w[k] * unit_exp(a[k] * x);
  return acc;
}

std::complex<double> digit_mask(std::span<const std::int64_t> digits, double x) {
  std::complex<double> acc{0.0, 0.0};
  for (auto a : digits) acc += unit_exp(static_cast<double>(a) * x);
  return acc / static_cast<double>(digits.size());
}

std::complex<double> digit_mask(std::span<const std::int64_t> digits, const Rational& x) {
  std::complex<double> acc{0.0, 0.0};
  for (auto a : digits) acc += unit_exp(Rational(a) * x);
  return acc / static_cast<double>(digits.size());
}

namespace {

double tail_bound(const SelfSimilarMeasure& mu, double abs_xi, int depth) {
  const double n = static_cast<double>(mu.scale());
  const double exponent = 2.0 * std::numbers::pi * static_cast<double>(mu.max_digit()) * abs_xi *
                          std::pow(n, -depth) / (n - 1.0);
  return std::expm1(exponent);
}

}  // namespace

TransformValue ft_selfsimilar(const SelfSimilarMeasure& mu, double xi, const EvalPolicy& policy) {
  policy.validate();
  std::complex<double> prod{1.0, 0.0};
  double t = xi;
  const double n = static_cast<double>(mu.scale());
  for (int j = 1; j <= policy.truncation_depth; ++j) {
    t /= n;
    prod *= digit_mask(mu.digits(), t);
  }
  return {prod, tail_bound(mu, std::abs(xi), policy.truncation_depth)};
}

TransformValue ft_selfsimilar(const SelfSimilarMeasure& mu, const Rational& xi, const EvalPolicy& policy) {
  policy.validate();
  std::complex<double> prod{1.0, 0.0};
  Rational t = xi;
  const Rational n(mu.scale());
  for (int j = 1; j <= policy.truncation_depth; ++j) {
    t /= n;
    const auto factor = digit_mask(mu.digits(), t);
    prod *= factor;
    if (factor == std::complex<double>{0.0, 0.0}) break;
  }
  return {prod, tail_bound(mu, std::abs(to_double(xi)), policy.truncation_depth)};
}

std::complex<double> ft_lebesgue(double xi) {
  if (xi == 0.0) return {1.0, 0.0};
  const double px = std::numbers::pi * xi;
  return unit_exp(xi / 2.0) * (std::sin(px) / px);
}

std::complex<double> ft_lebesgue(const Rational& xi) {
  if (xi == 0) return {1.0, 0.0};
  if (is_integer(xi)) return {0.0, 0.0};
  const double px = std::numbers::pi * to_double(xi);
  return unit_exp(xi / 2) * (std::sin(px) / px);
}

TransformValue ft_continuous(const ContinuousFactor& nu, double xi, const EvalPolicy& policy) {
  if (const auto* ss = std::get_if<SelfSimilarMeasure>(&nu)) return ft_selfsimilar(*ss, xi, policy);
  return {ft_lebesgue(xi), 0.0};
}

TransformValue ft_continuous(const ContinuousFactor& nu, const Rational& xi, const EvalPolicy& policy) {
  if (const auto* ss = std::get_if<SelfSimilarMeasure>(&nu)) return ft_selfsimilar(*ss, xi, policy);
  return {ft_lebesgue(xi), 0.0};
}

TransformValue ft_convolution(const ConvolutionMeasure& mu, double xi, const EvalPolicy& policy) {
  const auto nu = ft_continuous(mu.continuous_factor(), xi, policy);
  const double q = static_cast<double>(mu.dilation());
  return {mask_eval(mu.discrete_factor(), q * xi) * nu.value, nu.error_bound};
}

TransformValue ft_convolution(const ConvolutionMeasure& mu, const Rational& xi, const EvalPolicy& policy) {
  const auto nu = ft_continuous(mu.continuous_factor(), xi, policy);
  return {mask_eval(mu.discrete_factor(), Rational(mu.dilation()) * xi) * nu.value, nu.error_bound};
}

TransformValue fourier_transform(const Measure& mu, double xi, const EvalPolicy& policy) {
  return std::visit(
      [&](const auto& m) -> TransformValue {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, AtomicMeasure>) return {mask_eval(m, xi), 0.0};
        else if constexpr (std::is_same_v<T, SelfSimilarMeasure>) return ft_selfsimilar(m, xi, policy);
        else return ft_convolution(m, xi, policy);
      },
      mu);
}

TransformValue fourier_transform(const Measure& mu, const Rational& xi, const EvalPolicy& policy) {
  return std::visit(
      [&](const auto& m) -> TransformValue {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, AtomicMeasure>) return {mask_eval(m, xi), 0.0};
        else if constexpr (std::is_same_v<T, SelfSimilarMeasure>) return ft_selfsimilar(m, xi, policy);
        else return ft_convolution(m, xi, policy);
      },
      mu);
}

AtomicMeasure approximate_atoms(const SelfSimilarMeasure& mu, int depth, std::size_t cap) {
  if (depth < 1) throw PreconditionError("approximate_atoms: depth must be >= 1");
  const std::size_t k = mu.digits().size();
  std::size_t count = 1;
  for (int j = 0; j < depth; ++j) {
    if (count > cap / k) throw SizeCapExceeded("approximate_atoms: (#A)^J exceeds the size cap");
    count *= k;
  }
  if (count > cap) throw SizeCapExceeded("approximate_atoms: (#A)^J exceeds the size cap");

  // integer numerators over n^J, built level by level
  std::vector<BigInt> sums{BigInt(0)};
  const BigInt n(mu.scale());
  for (int j = 0; j < depth; ++j) {
    std::vector<BigInt> next;
    next.reserve(sums.size() * k);
    for (const auto& s : sums) {
      for (auto a : mu.digits()) next.push_back(s * n + a);
    }
    sums = std::move(next);
  }
  std::sort(sums.begin(), sums.end());
  BigInt denom = 1;
  for (int j = 0; j < depth; ++j) denom *= n;

  std::vector<Rational> atoms, weights;
  const Rational unit(BigInt(1), BigInt(count));
  for (std::size_t i = 0; i < sums.size();) {
    std::size_t jdx = i;
    while (jdx < sums.size() && sums[jdx] == sums[i]) ++jdx;
    atoms.emplace_back(sums[i], denom);
    weights.push_back(unit * static_cast<long long>(jdx - i));
    i = jdx;
  }
  return AtomicMeasure(std::move(atoms), std::move(weights));
}

}  // namespace spectra_forge
