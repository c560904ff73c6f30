#include "spectra_forge/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "spectra_forge/cyclotomic.hpp"
#include "spectra_forge/errors.hpp"
#include "spectra_forge/number_theory.hpp"

namespace spectra_forge {

namespace {

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_int64(const BigInt& v) {
  return v >= BigInt(std::numeric_limits<std::int64_t>::min()) && v <= BigInt(std::numeric_limits<std::int64_t>::max());
}

bool has_denominator(const ZeroSetDescriptor& desc, std::int64_t d) {
  return std::binary_search(desc.denominators.begin(), desc.denominators.end(), d);
}

// x = p/q in lowest terms; divide by n repeatedly while keeping the fraction
// reduced. Once |p| * max(D) < q no further level can hit D.
std::optional<std::pair<int, std::int64_t>> level_fast(const ZeroSetDescriptor& desc, std::int64_t p_signed,
                                                       std::int64_t q_in, bool& overflow) {
  overflow = false;
  if (desc.denominators.empty() || p_signed == 0) return std::nullopt;
  const u128 max_d = static_cast<u128>(desc.denominators.back());
  const u128 n = static_cast<u128>(desc.scale);
  u128 p = p_signed < 0 ? static_cast<u128>(-static_cast<i128>(p_signed)) : static_cast<u128>(p_signed);
  u128 q = static_cast<u128>(q_in);
  const u128 cap = (~u128{0}) >> 8;
  for (int j = 1;; ++j) {
    const u128 g = gcd128(p, n);
    p /= g;
    const u128 step = n / g;
    if (q > cap / step) {
      overflow = true;
      return std::nullopt;
    }
    q *= step;
    if (q <= max_d && has_denominator(desc, static_cast<std::int64_t>(q))) {
      return std::make_pair(j, static_cast<std::int64_t>(q));
    }
    if (p * max_d < q) return std::nullopt;
  }
}

std::optional<std::pair<int, std::int64_t>> level_exact(const ZeroSetDescriptor& desc, const Rational& x) {
  if (desc.denominators.empty() || x == 0) return std::nullopt;
  BigInt p = abs(numerator_of(x));
  BigInt q = denominator_of(x);
  const BigInt n(desc.scale);
  const BigInt max_d(desc.denominators.back());
  for (int j = 1;; ++j) {
    const BigInt g = gcd(p, n);
    p /= g;
    q *= n / g;
    if (q <= max_d && has_denominator(desc, static_cast<std::int64_t>(q))) {
      return std::make_pair(j, static_cast<std::int64_t>(q));
    }
    if (p * max_d < q) return std::nullopt;
  }
}

std::optional<std::pair<int, std::int64_t>> level_of(const ZeroSetDescriptor& desc, const Rational& x) {
  const BigInt p = numerator_of(x);
  const BigInt q = denominator_of(x);
  if (fits_int64(p) && fits_int64(q)) {
    bool overflow = false;
    auto r = level_fast(desc, static_cast<std::int64_t>(p), static_cast<std::int64_t>(q), overflow);
    if (!overflow) return r;
  }
  return level_exact(desc, x);
}

void require_zero(const FrequencySet& lambda) {
  if (!lambda.contains(Rational(0))) throw PreconditionError("is_bizero: 0 must belong to the frequency set");
}

std::vector<std::int64_t> checked_atoms(std::span<const std::int64_t> atoms, std::size_t size, const char* what) {
  std::vector<std::int64_t> c(atoms.begin(), atoms.end());
  std::sort(c.begin(), c.end());
  const std::string name(what);
  if (c.size() != size) throw PreconditionError(name + ": expected " + std::to_string(size) + " atoms");
  if (std::adjacent_find(c.begin(), c.end()) != c.end()) throw PreconditionError(name + ": atoms must be distinct");
  if (c.front() != 0) throw PreconditionError(name + ": atoms must be non-negative and contain 0");
  if (const auto g = gcd_of(c); g != 1) {
    throw PreconditionError(name + ": normalize first, gcd of the atoms is " + std::to_string(g));
  }
  return c;
}

ClassifyResult validated(std::span<const std::int64_t> atoms, FrequencySet spectrum) {
  const auto mu = AtomicMeasure::integer_uniform(atoms);
  if (auto outcome = is_bizero(spectrum, mu); !outcome) {
    return {false, std::nullopt, "closed-form spectrum failed exact validation: " + outcome.reason};
  }
  return {true, std::move(spectrum), "closed-form condition holds; orthogonality verified exactly"};
}

}  // namespace

std::vector<Rational> rational_mask_zeros(std::span<const std::int64_t> digits, std::int64_t n) {
  if (n < 1) throw PreconditionError("rational_mask_zeros: n must be positive");
  std::map<std::int64_t, bool> cache;
  std::vector<Rational> out;
  for (std::int64_t k = 1; k < n; ++k) {
    const std::int64_t s = n / std::gcd(k, n);
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, divides_cyclotomic(digits, s)).first;
    if (it->second) out.emplace_back(k, n);
  }
  return out;
}

ZeroSetDescriptor zero_set_descriptor(const SelfSimilarMeasure& mu) {
  ZeroSetDescriptor desc;
  desc.scale = mu.scale();
  desc.denominators = cyclotomic_divisors(mu.digits());
  for (auto s : desc.denominators) {
    for (std::int64_t k = 1; k < s; ++k) {
      if (std::gcd(k, s) == 1) desc.base_zeros.emplace_back(k, s);
    }
  }
  std::sort(desc.base_zeros.begin(), desc.base_zeros.end());
  return desc;
}

std::optional<int> zeroset_level(const ZeroSetDescriptor& desc, const Rational& x) {
  if (auto r = level_of(desc, x)) return r->first;
  return std::nullopt;
}

bool zeroset_membership(const ZeroSetDescriptor& desc, const Rational& x) {
  return level_of(desc, x).has_value();
}

BiZeroOutcome is_bizero(const FrequencySet& lambda, const AtomicMeasure& mu, const EvalPolicy& policy) {
  policy.validate();
  require_zero(lambda);
  BiZeroOutcome out;
  BiZeroCertificate cert{lambda, {}};

  if (mu.is_uniform()) {
    // c = (c' + t) / L with c' non-negative integers: m_C(x) vanishes iff m_{C'}(x / L) does
    BigInt lcm_den = 1;
    for (const auto& a : mu.atoms()) lcm_den = lcm(lcm_den, denominator_of(a));
    std::vector<std::int64_t> shifted;
    const Rational base = mu.atoms().front();
    for (const auto& a : mu.atoms()) {
      const BigInt v = numerator_of((a - base) * Rational(lcm_den));
      if (!fits_int64(v)) throw SizeCapExceeded("is_bizero: scaled atoms exceed 64 bits");
      shifted.push_back(static_cast<std::int64_t>(v));
    }
    std::map<std::int64_t, bool> cache;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      for (std::size_t j = i + 1; j < lambda.size(); ++j) {
        const BigInt s_big = denominator_of((lambda[j] - lambda[i]) / Rational(lcm_den));
        bool zero = false;
        std::int64_t s = 0;
        if (s_big != 1 && fits_int64(s_big)) {
          s = static_cast<std::int64_t>(s_big);
          auto it = cache.find(s);
          if (it == cache.end()) it = cache.emplace(s, divides_cyclotomic(shifted, s)).first;
          zero = it->second;
        }
        if (!zero) {
          out.offending_pair = std::make_pair(lambda[i], lambda[j]);
          out.reason = "m(" + to_string(lambda[j]) + " - " + to_string(lambda[i]) + ") != 0: no cyclotomic factor " +
                       (s_big == 1 ? std::string("(integer difference)") : "Phi_" + s_big.str());
          return out;
        }
        PairEvidence e;
        e.first = lambda[i];
        e.second = lambda[j];
        e.kind = PairWitness::cyclotomic;
        e.divisor = s;
        cert.pairs.push_back(std::move(e));
      }
    }
    out.certificate = std::move(cert);
    return out;
  }

  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      const double mag = std::abs(mask_eval(mu, lambda[j] - lambda[i]));
      if (!(mag < policy.tolerance)) {
        out.offending_pair = std::make_pair(lambda[i], lambda[j]);
        out.reason = "|m(" + to_string(lambda[j]) + " - " + to_string(lambda[i]) + ")| = " + std::to_string(mag) +
                     " is not below the tolerance";
        return out;
      }
      PairEvidence e;
      e.first = lambda[i];
      e.second = lambda[j];
      e.kind = PairWitness::numeric;
      e.magnitude = mag;
      e.tolerance = policy.tolerance;
      cert.pairs.push_back(std::move(e));
    }
  }
  out.certificate = std::move(cert);
  return out;
}

BiZeroOutcome is_bizero(const FrequencySet& lambda, const SelfSimilarMeasure& mu) {
  require_zero(lambda);
  const ZeroSetDescriptor desc = zero_set_descriptor(mu);
  BiZeroOutcome out;
  BiZeroCertificate cert{lambda, {}};
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      const auto hit = level_of(desc, lambda[j] - lambda[i]);
      if (!hit) {
        out.offending_pair = std::make_pair(lambda[i], lambda[j]);
        out.reason = to_string(lambda[j]) + " - " + to_string(lambda[i]) + " is not in the zero set";
        return out;
      }
      PairEvidence e;
      e.first = lambda[i];
      e.second = lambda[j];
      e.kind = PairWitness::zero_set;
      e.level = hit->first;
      e.divisor = hit->second;
      cert.pairs.push_back(std::move(e));
    }
  }
  out.certificate = std::move(cert);
  return out;
}

bool spectral_discrete_check(const AtomicMeasure& mu, const FrequencySet& lambda, const EvalPolicy& policy) {
  if (!mu.is_uniform()) return false;
  if (lambda.size() != mu.size() || lambda.empty()) return false;
  const FrequencySet shifted = lambda.contains(Rational(0))
                                   ? lambda
                                   : FrequencySet([&] {
                                       std::vector<Rational> v;
                                       for (const auto& x : lambda) v.push_back(x - lambda[0]);
                                       return v;
                                     }());
  return static_cast<bool>(is_bizero(shifted, mu, policy));
}

ClassifyResult classify_3(std::span<const std::int64_t> atoms) {
  const auto c = checked_atoms(atoms, 3, "classify_3");
  if (((c[2] - 2 * c[1]) % 3 + 3) % 3 != 0) {
    return {false, std::nullopt, "c2 - 2 c1 is not divisible by 3"};
  }
  return validated(c, FrequencySet{Rational(0), Rational(1, 3), Rational(2, 3)});
}

ClassifyResult classify_4(std::span<const std::int64_t> atoms) {
  const auto c = checked_atoms(atoms, 4, "classify_4");
  std::vector<std::int64_t> even;
  std::vector<std::int64_t> odd;
  for (std::size_t i = 1; i < 4; ++i) (c[i] % 2 == 0 ? even : odd).push_back(c[i]);
  if (even.size() != 1) {
    return {false, std::nullopt, "need exactly one even nonzero atom, found " + std::to_string(even.size())};
  }
  const std::int64_t e = even[0];
  const std::int64_t d = std::abs(odd[0] - odd[1]);
  const int alpha_e = p_adic_valuation(e, 2);
  const int alpha_d = p_adic_valuation(d, 2);
  if (alpha_e != alpha_d) {
    return {false, std::nullopt,
            "2-adic valuations differ: v2(" + std::to_string(e) + ") = " + std::to_string(alpha_e) + ", v2(" +
                std::to_string(d) + ") = " + std::to_string(alpha_d)};
  }
  const std::int64_t a = std::gcd(e, d);
  return validated(c, FrequencySet{Rational(0), Rational(1, 2), Rational(1, 2 * a), Rational(a + 1, 2 * a)});
}

UniformClassification classify_uniform(std::span<const std::int64_t> atoms) {
  std::vector<std::int64_t> c(atoms.begin(), atoms.end());
  std::sort(c.begin(), c.end());
  if (c.empty() || c.front() != 0) throw PreconditionError("classify_uniform: atoms must be non-negative and contain 0");
  if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
    throw PreconditionError("classify_uniform: atoms must be distinct");
  }
  UniformClassification out;
  if (c.size() == 1) {
    out.verdict = DiscreteVerdict::spectral;
    out.spectrum = FrequencySet{Rational(0)};
    out.method = "single atom";
    out.reason = "a point mass is spectral";
    return out;
  }
  const std::int64_t g = gcd_of(c);
  std::vector<std::int64_t> norm;
  for (auto x : c) norm.push_back(x / g);

  std::optional<FrequencySet> base;
  if (norm.size() == 2) {
    out.method = "two atoms";
    out.reason = "m vanishes at 1/2 after normalization";
    base = FrequencySet{Rational(0), Rational(1, 2)};
  } else if (norm.size() == 3 || norm.size() == 4) {
    const ClassifyResult r = norm.size() == 3 ? classify_3(norm) : classify_4(norm);
    out.method = norm.size() == 3 ? "classify_3" : "classify_4";
    out.reason = r.reason;
    if (!r.spectral) {
      out.verdict = DiscreteVerdict::not_spectral;
      return out;
    }
    base = r.spectrum;
  } else {
    out.method = "tiling conditions";
    const PrimePowerSet sa = compute_SA(norm);
    if (!check_T1(norm, sa) || !check_T2(norm, sa)) {
      out.reason = "(T1)/(T2) do not both hold and no closed form covers " + std::to_string(norm.size()) + " atoms";
      return out;
    }
    out.reason = "(T1) and (T2) hold";
    base = laba_spectrum(norm);
  }
  out.verdict = DiscreteVerdict::spectral;
  out.spectrum = scaled(*base, Rational(1, g));
  return out;
}

FrequencySet SpectrumTower::truncation(int depth) const {
  if (depth < 1) throw PreconditionError("spectrum truncation: depth must be >= 1");
  FrequencySet out = gamma;
  BigInt power = scale;
  for (int j = 1; j < depth; ++j) {
    out = direct_sum(out, scaled(gamma, Rational(power)));
    power *= scale;
  }
  return out;
}

namespace {

// n * laba_spectrum(A) with representatives in {-(n-2), ..., n-2}
std::vector<Rational> tower_generator(std::span<const std::int64_t> a, std::int64_t n) {
  FrequencySet laba;
  try {
    laba = laba_spectrum(a);
  } catch (const PreconditionError& e) {
    throw StructureError(std::string("selfsimilar_spectrum: ") + e.what());
  }
  std::vector<Rational> gamma;
  for (const auto& x : laba) {
    const Rational k = x * n;
    if (!is_integer(k)) throw StructureError("selfsimilar_spectrum: spectrum not inside (1/n)Z: " + to_string(x));
    gamma.push_back(k > n - 2 ? k - n : k);
  }
  return gamma;
}

bool tiles(std::span<const std::int64_t> a, std::int64_t n) {
  return a.back() < n && tiling_complement(a, n).has_value();
}

}  // namespace

SpectrumTower selfsimilar_tower(const SelfSimilarMeasure& mu) {
  const auto& a = mu.digits();
  const std::int64_t n = mu.scale();
  const std::int64_t g = gcd_of(a);
  if (g > 1) {
    // mu_{gA',n} is the image of mu_{A',n} under x -> g x, so a spectrum of
    // the latter divided by g is a spectrum of mu
    std::vector<std::int64_t> reduced;
    for (auto x : a) reduced.push_back(x / g);
    if (tiles(reduced, n)) {
      std::vector<Rational> gamma;
      for (const auto& k : tower_generator(reduced, n)) gamma.push_back(k / g);
      return {FrequencySet(std::move(gamma)), n, {}, g};
    }
  }
  if (!tiles(a, n)) {
    throw StructureError("selfsimilar_spectrum: digit set has no tiling complement in {0.." + std::to_string(n - 1) +
                         "}");
  }
  SpectrumTower tower{FrequencySet(tower_generator(a, n)), n, {}};
  if (g != 1) {
    tower.warnings.push_back("gcd of the digits is " + std::to_string(g) +
                             "; the tower is still orthogonal but need not be a complete spectrum");
  }
  return tower;
}

FrequencySet selfsimilar_spectrum(const SelfSimilarMeasure& mu, int depth) {
  return selfsimilar_tower(mu).truncation(depth);
}

std::string JpScanResult::label() const {
  if (exact_model) return "exact finite model";
  return "evidence at depth " + std::to_string(depth);
}

JpScanResult jp_scan(const Measure& mu, const FrequencySet& lambda, std::span<const double> grid,
                     const EvalPolicy& policy) {
  policy.validate();
  JpScanResult out;
  const auto* atomic = std::get_if<AtomicMeasure>(&mu);
  out.exact_model = atomic != nullptr && atomic->size() == lambda.size();
  out.depth = atomic != nullptr ? 0 : policy.truncation_depth;
  const auto freqs = lambda.as_doubles();
  out.points.reserve(grid.size());
  for (double x : grid) {
    JpPoint pt{x, 0.0, 0.0};
    for (double l : freqs) {
      if (atomic != nullptr) {
        pt.q += std::norm(mask_eval(*atomic, x + l));
      } else {
        const TransformValue tv = fourier_transform(mu, x + l, policy);
        const double mag2 = std::norm(tv.value);
        pt.q += mag2;
        pt.tail_error += mag2 * ((1.0 + tv.error_bound) * (1.0 + tv.error_bound) - 1.0);
      }
    }
    out.max_deviation = std::max(out.max_deviation, std::abs(pt.q - 1.0));
    out.max_deficit = std::max(out.max_deficit, 1.0 - pt.q);
    if (pt.q > 1.0 + policy.tolerance + pt.tail_error) out.bessel_ok = false;
    out.points.push_back(pt);
  }
  return out;
}

}  // namespace spectra_forge
