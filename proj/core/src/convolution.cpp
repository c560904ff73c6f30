#include "spectra_forge/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "spectra_forge/cyclotomic.hpp"
#include "spectra_forge/errors.hpp"
#include "spectra_forge/measure_json.hpp"
#include "spectra_forge/number_theory.hpp"

namespace spectra_forge {

using nlohmann::json;

namespace {

std::int64_t to_int64(const BigInt& v, const char* what) {
  if (v > BigInt(std::numeric_limits<std::int64_t>::max()) || v < BigInt(std::numeric_limits<std::int64_t>::min())) {
    throw SizeCapExceeded(std::string(what) + ": value exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

std::vector<std::int64_t> dilate(std::span<const std::int64_t> c, std::int64_t q) {
  std::vector<std::int64_t> out;
  out.reserve(c.size());
  for (auto x : c) out.push_back(q * x);
  return out;
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

GramSection eigen_section(const Eigen::MatrixXcd& g, int depth) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(g, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw StructureError("Gram eigen-decomposition failed");
  return {depth, static_cast<std::size_t>(g.rows()), solver.eigenvalues().minCoeff(), solver.eigenvalues().maxCoeff()};
}

// G[i, k] = transform(lambda_i - lambda_k)
template <class Transform>
Eigen::MatrixXcd gram_matrix(const FrequencySet& freqs, Transform&& transform) {
  const auto m = static_cast<Eigen::Index>(freqs.size());
  Eigen::MatrixXcd g(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    g(i, i) = transform(Rational(0));
    for (Eigen::Index k = i + 1; k < m; ++k) {
      const std::complex<double> v = transform(freqs[static_cast<std::size_t>(i)] - freqs[static_cast<std::size_t>(k)]);
      g(i, k) = v;
      g(k, i) = std::conj(v);
    }
  }
  return g;
}

// Exact zero test for the continuous factor at a rational point.
class ContinuousZeros {
public:
  explicit ContinuousZeros(const ContinuousFactor& nu) {
    if (const auto* ss = std::get_if<SelfSimilarMeasure>(&nu)) desc_ = zero_set_descriptor(*ss);
  }

  bool vanishes(const Rational& x) const {
    if (!desc_) return x != 0 && is_integer(x);
    return zeroset_membership(*desc_, x);
  }

private:
  std::optional<ZeroSetDescriptor> desc_;
};

}  // namespace

FrequencySet truncate(const SpectrumGenerator& gen, int depth) {
  if (depth < 1) throw PreconditionError("truncate: depth must be >= 1");
  if (const auto* lat = std::get_if<LatticeGenerator>(&gen)) {
    if (lat->spacing <= 0) throw PreconditionError("truncate: lattice spacing must be positive");
    std::vector<Rational> v;
    for (int k = -depth; k <= depth; ++k) v.push_back(lat->spacing * k);
    return FrequencySet(std::move(v));
  }
  return std::get<SpectrumTower>(gen).truncation(depth);
}

json to_json(const SpectrumGenerator& gen) {
  if (const auto* lat = std::get_if<LatticeGenerator>(&gen)) {
    return {{"type", "lattice"}, {"spacing", to_string(lat->spacing)}};
  }
  const auto& tower = std::get<SpectrumTower>(gen);
  json j{{"type", "tower"}, {"gamma", rationals_to_json(tower.gamma.values())}, {"scale", tower.scale}};
  if (!tower.warnings.empty()) j["warnings"] = tower.warnings;
  if (tower.divisor != 1) j["digit_divisor"] = tower.divisor;
  return j;
}

SpectrumGenerator default_generator(const ContinuousFactor& nu) {
  if (const auto* ss = std::get_if<SelfSimilarMeasure>(&nu)) return selfsimilar_tower(*ss);
  return LatticeGenerator{};
}

json to_json(const ConvolutionSpectrum& cs) {
  json witness = json::array();
  for (Eigen::Index i = 0; i < cs.witness.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < cs.witness.cols(); ++k) row.push_back(complex_json(cs.witness(i, k)));
    witness.push_back(std::move(row));
  }
  return {{"q", cs.q},
          {"discrete_part", rationals_to_json(cs.discrete_part.values())},
          {"generator", to_json(cs.generator)},
          {"depth", cs.depth},
          {"assembled", rationals_to_json(cs.assembled.values())},
          {"witness_matrix", std::move(witness)},
          {"witness_determinant", complex_json(cs.witness_determinant)}};
}

ConvolutionSpectrum riesz_spectrum_convolution(const AtomicMeasure& eta, std::int64_t q, const SpectrumGenerator& gamma,
                                               int depth, const RieszSearchOptions& options) {
  if (q < 1) throw PreconditionError("riesz_spectrum_convolution: q must be >= 1");
  const auto a = dilate(eta.integer_atoms(), q);
  ConvolutionSpectrum cs;
  cs.q = q;
  cs.generator = gamma;
  cs.depth = depth;
  const FrequencySet gamma_j = truncate(gamma, depth);
  for (const auto& g : gamma_j) {
    if (!is_integer(g * q)) {
      throw StructureError("riesz_spectrum_convolution: q * gamma is not an integer for gamma = " + to_string(g));
    }
  }
  cs.discrete_part = find_riesz_spectrum(a, options);
  const auto k = static_cast<Eigen::Index>(a.size());
  cs.witness.resize(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      cs.witness(i, j) = unit_exp(Rational(a[static_cast<std::size_t>(i)]) * cs.discrete_part[static_cast<std::size_t>(j)]);
    }
  }
  cs.witness_determinant = cs.witness.partialPivLu().determinant();
  cs.assembled = direct_sum(cs.discrete_part, gamma_j);
  return cs;
}

bool zero_set_hypothesis(const ContinuousFactor& nu, std::int64_t q) {
  if (q < 1) throw PreconditionError("zero_set_hypothesis: q must be >= 1");
  const auto* ss = std::get_if<SelfSimilarMeasure>(&nu);
  if (ss == nullptr) return true;
  const ZeroSetDescriptor desc = zero_set_descriptor(*ss);
  const std::int64_t qn = q * desc.scale;
  return std::all_of(desc.denominators.begin(), desc.denominators.end(), [&](std::int64_t s) { return qn % s == 0; });
}

ConvolutionOrthogonality spectrum_convolution(const ConvolutionMeasure& mu, const FrequencySet& discrete_part,
                                              const SpectrumGenerator& gamma, int depth) {
  const AtomicMeasure& eta = mu.discrete_factor();
  if (!eta.is_uniform()) throw PreconditionError("spectrum_convolution: weights of the discrete factor are not uniform");
  if (discrete_part.size() != eta.size()) {
    throw PreconditionError("spectrum_convolution: #S = " + std::to_string(discrete_part.size()) +
                            " differs from #C = " + std::to_string(eta.size()));
  }
  const AtomicMeasure eta_q = mu.dilated_discrete();
  if (const auto outcome = is_bizero(discrete_part, eta_q); !outcome) {
    throw PreconditionError("spectrum_convolution: S is not a bi-zero set of m_{qC}: " + outcome.reason);
  }
  if (!zero_set_hypothesis(mu.continuous_factor(), mu.dilation())) {
    throw PreconditionError("spectrum_convolution: q Z_nu is not contained in the integers");
  }
  const ContinuousZeros nu_zeros(mu.continuous_factor());
  const FrequencySet gamma_j = truncate(gamma, depth);
  for (std::size_t i = 0; i < gamma_j.size(); ++i) {
    for (std::size_t j = i + 1; j < gamma_j.size(); ++j) {
      if (!nu_zeros.vanishes(gamma_j[j] - gamma_j[i])) {
        throw PreconditionError("spectrum_convolution: Gamma is not orthogonal for nu at " + to_string(gamma_j[i]) +
                                ", " + to_string(gamma_j[j]));
      }
    }
  }

  ConvolutionOrthogonality out;
  out.spectrum = direct_sum(discrete_part, gamma_j);
  const auto a = eta_q.integer_atoms();
  std::map<BigInt, bool> cyclo;
  const auto& lam = out.spectrum;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    for (std::size_t j = i + 1; j < lam.size(); ++j) {
      const Rational d = lam[j] - lam[i];
      const BigInt den = denominator_of(d);
      bool discrete_zero = false;
      if (den != 1) {
        auto it = cyclo.find(den);
        if (it == cyclo.end()) {
          const bool z = den <= BigInt(std::numeric_limits<std::int64_t>::max()) &&
                         divides_cyclotomic(a, static_cast<std::int64_t>(den));
          it = cyclo.emplace(den, z).first;
        }
        discrete_zero = it->second;
      }
      if (discrete_zero) {
        ++out.counts.discrete;
      } else if (nu_zeros.vanishes(d)) {
        ++out.counts.continuous;
      } else {
        throw StructureError("spectrum_convolution: no vanishing factor for " + to_string(lam[j]) + " - " +
                             to_string(lam[i]));
      }
    }
  }
  return out;
}

FactoredSpectrum factor_spectrum(const FrequencySet& lambda, std::int64_t q) {
  if (q < 1) throw PreconditionError("factor_spectrum: q must be >= 1");
  if (!lambda.contains(Rational(0))) throw PreconditionError("factor_spectrum: 0 must belong to the frequency set");
  std::map<Rational, std::vector<Rational>> classes;
  for (const auto& l : lambda) {
    const Rational ql = l * q;
    const Rational fr = frac_of(ql);
    classes[fr / q].push_back((ql - fr) / q);
  }
  FactoredSpectrum out;
  std::vector<Rational> s;
  for (auto& [key, members] : classes) {
    s.push_back(key);
    out.classes.emplace_back(key, FrequencySet(std::move(members)));
  }
  out.discrete_part = FrequencySet(std::move(s));
  return out;
}

Certificate nonspectral_certificate(const ConvolutionMeasure& mu, int depth) {
  const AtomicMeasure& eta = mu.discrete_factor();
  const auto& nu = mu.continuous_factor();
  if (!zero_set_hypothesis(nu, mu.dilation())) {
    throw PreconditionError("nonspectral_certificate: q Z_nu is not contained in the integers");
  }
  Certificate cert;
  cert.policy.depth = depth;
  cert.witnesses["discrete_factor"] = to_json(eta);
  cert.witnesses["uniform_weights"] = eta.is_uniform();

  std::optional<SpectrumGenerator> gen;
  std::string nu_reason;
  if (std::holds_alternative<UnitIntervalLebesgue>(nu)) {
    gen = LatticeGenerator{};
  } else {
    try {
      SpectrumTower tower = selfsimilar_tower(std::get<SelfSimilarMeasure>(nu));
      if (tower.warnings.empty()) gen = std::move(tower);
      else nu_reason = tower.warnings.front();
    } catch (const StructureError& e) {
      nu_reason = e.what();
    }
  }
  if (!gen) {
    cert.verdict = Verdict::inconclusive;
    cert.provenance = "convolution factorization";
    cert.reason = "continuous factor not known to be R-spectral: " + nu_reason;
    return cert;
  }
  cert.witnesses["continuous_generator"] = to_json(*gen);

  if (!eta.is_uniform()) {
    cert.verdict = Verdict::not_spectral;
    cert.provenance = "discrete weight uniformity test; convolution factorization";
    cert.reason = "discrete factor has non-uniform weights, so it is not spectral and neither is the convolution";
    return cert;
  }

  const UniformClassification dd = classify_uniform(eta.integer_atoms());
  cert.witnesses["discrete_decision"] = {{"method", dd.method}, {"reason", dd.reason}};
  if (dd.verdict == DiscreteVerdict::not_spectral) {
    cert.verdict = Verdict::not_spectral;
    cert.provenance = "discrete classifier; convolution factorization";
    cert.reason = "discrete factor is not spectral: " + dd.reason;
    return cert;
  }
  if (dd.verdict == DiscreteVerdict::unknown) {
    cert.verdict = Verdict::inconclusive;
    cert.provenance = "discrete classifier";
    cert.reason = dd.reason;
    return cert;
  }
  const FrequencySet s = scaled(*dd.spectrum, Rational(1, mu.dilation()));
  const ConvolutionOrthogonality orth = spectrum_convolution(mu, s, *gen, depth);
  cert.verdict = Verdict::spectral;
  cert.provenance = "discrete classifier; convolution factorization; exact pairwise orthogonality";
  cert.witnesses["discrete_part"] = rationals_to_json(s.values());
  cert.witnesses["truncation"] = rationals_to_json(orth.spectrum.values());
  cert.witnesses["orthogonality"] = {{"discrete_pairs", orth.counts.discrete},
                                     {"continuous_pairs", orth.counts.continuous}};
  return cert;
}

IntervalUnionSpectrum interval_union_rspectrum(std::span<const ClosedInterval> intervals, std::span<const int> truncations,
                                               double relative_tolerance) {
  if (intervals.empty()) throw PreconditionError("interval_union_rspectrum: no intervals");
  std::vector<ClosedInterval> iv(intervals.begin(), intervals.end());
  std::sort(iv.begin(), iv.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
  for (std::size_t i = 0; i < iv.size(); ++i) {
    if (!(iv[i].lo < iv[i].hi)) throw PreconditionError("interval_union_rspectrum: empty or reversed interval");
    if (i > 0 && iv[i].lo < iv[i - 1].hi) throw PreconditionError("interval_union_rspectrum: overlapping intervals");
  }

  IntervalUnionSpectrum out;
  out.r = 1;
  for (const auto& x : iv) out.r = lcm(lcm(out.r, denominator_of(x.lo)), denominator_of(x.hi));
  const Rational r(out.r);
  out.s = -numerator_of(iv.front().lo * r);
  const Rational s(out.s);
  for (const auto& x : iv) {
    const std::int64_t from = to_int64(numerator_of(x.lo * r + s), "interval_union_rspectrum");
    const std::int64_t to = to_int64(numerator_of(x.hi * r + s), "interval_union_rspectrum");
    for (std::int64_t k = from; k < to; ++k) out.offsets.push_back(k);
  }
  out.discrete_part = find_riesz_spectrum(out.offsets);

  Rational total(0);
  for (const auto& x : iv) total += x.hi - x.lo;
  // normalized Lebesgue measure on E
  auto transform = [&](const Rational& xi) {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& x : iv) {
      const Rational len = x.hi - x.lo;
      acc += to_double(len / total) * unit_exp(xi * x.lo) * ft_lebesgue(xi * len);
    }
    return acc;
  };
  static constexpr int kDefaultTruncations[] = {2, 4, 8};
  if (truncations.empty()) truncations = kDefaultTruncations;
  out.validated = true;
  for (int k : truncations) {
    const FrequencySet freqs = scaled(direct_sum(out.discrete_part, truncate(LatticeGenerator{}, k)), r);
    GramSection sec = eigen_section(gram_matrix(freqs, transform), k);
    if (!(sec.min_eigenvalue > relative_tolerance * sec.max_eigenvalue)) out.validated = false;
    out.sections.push_back(sec);
  }
  return out;
}

json to_json(const IntervalUnionSpectrum& iu) {
  json sections = json::array();
  for (const auto& s : iu.sections) {
    sections.push_back({{"truncation", s.depth},
                        {"size", s.size},
                        {"min_eigenvalue", s.min_eigenvalue},
                        {"max_eigenvalue", s.max_eigenvalue}});
  }
  return {{"r", iu.r.str()},
          {"s", iu.s.str()},
          {"offsets", iu.offsets},
          {"discrete_part", rationals_to_json(iu.discrete_part.values())},
          {"spectrum", "r * (discrete_part (+) Z)"},
          {"sections", std::move(sections)},
          {"validated", iu.validated}};
}

RieszEvidence riesz_evidence(const ConvolutionMeasure& mu, std::span<const int> depths, int atom_extra_depth,
                             const RieszSearchOptions& options) {
  if (depths.empty()) throw PreconditionError("riesz_evidence: no depths given");
  if (atom_extra_depth < 0) throw PreconditionError("riesz_evidence: atom_extra_depth must be >= 0");
  const AtomicMeasure eta_q = mu.dilated_discrete();
  const SpectrumGenerator gen = default_generator(mu.continuous_factor());
  RieszEvidence ev;
  ev.atom_extra_depth = atom_extra_depth;
  ev.discrete_part = find_riesz_spectrum(eta_q.integer_atoms(), options);

  for (int depth : depths) {
    const FrequencySet freqs = direct_sum(ev.discrete_part, truncate(gen, depth));
    Eigen::MatrixXcd g;
    if (const auto* ss = std::get_if<SelfSimilarMeasure>(&mu.continuous_factor())) {
      const AtomicMeasure nu_k = approximate_atoms(*ss, depth + atom_extra_depth);
      g = gram_matrix(freqs, [&](const Rational& xi) { return mask_eval(eta_q, xi) * mask_eval(nu_k, xi); });
    } else {
      g = gram_matrix(freqs, [&](const Rational& xi) { return mask_eval(eta_q, xi) * ft_lebesgue(xi); });
    }
    ev.sections.push_back(eigen_section(g, depth));
  }

  double min_low = ev.sections.front().min_eigenvalue;
  double max_low = min_low;
  ev.largest = 0.0;
  for (const auto& s : ev.sections) {
    min_low = std::min(min_low, s.min_eigenvalue);
    max_low = std::max(max_low, s.min_eigenvalue);
    ev.largest = std::max(ev.largest, s.max_eigenvalue);
  }
  ev.epsilon0 = min_low;
  ev.floor_ok = ev.epsilon0 > 0.01 * ev.largest;
  ev.stable = min_low > 0.0 && max_low <= 2.0 * min_low;
  return ev;
}

json to_json(const RieszEvidence& ev) {
  json sections = json::array();
  for (const auto& s : ev.sections) {
    sections.push_back({{"depth", s.depth},
                        {"size", s.size},
                        {"min_eigenvalue", s.min_eigenvalue},
                        {"max_eigenvalue", s.max_eigenvalue}});
  }
  return {{"discrete_part", rationals_to_json(ev.discrete_part.values())},
          {"atom_depth_offset", ev.atom_extra_depth},
          {"sections", std::move(sections)},
          {"epsilon0", ev.epsilon0},
          {"largest", ev.largest},
          {"floor_ok", ev.floor_ok},
          {"stable", ev.stable},
          {"scope", "finite sections only; the infinite Riesz property is not verified"}};
}

}  // namespace spectra_forge
