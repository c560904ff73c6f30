#include "spectra_forge/cyclotomic.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "spectra_forge/errors.hpp"

namespace spectra_forge {

namespace {

std::vector<std::int64_t> sorted_unique(std::span<const std::int64_t> values, const char* what) {
  std::vector<std::int64_t> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw PreconditionError(std::string(what) + ": duplicate element");
  }
  return v;
}

bool contains(std::span<const std::int64_t> v, std::int64_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

std::int64_t max_of(std::span<const std::int64_t> v) {
  return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
}

// Euler phi for 0..limit
std::vector<std::int64_t> totient_table(std::int64_t limit) {
  std::vector<std::int64_t> phi(static_cast<std::size_t>(limit) + 1);
  std::iota(phi.begin(), phi.end(), std::int64_t{0});
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (phi[static_cast<std::size_t>(p)] != p) continue;
    for (std::int64_t k = p; k <= limit; k += p) {
      auto& v = phi[static_cast<std::size_t>(k)];
      v -= v / p;
    }
  }
  return phi;
}

}  // namespace

IntPolynomial digit_polynomial(std::span<const std::int64_t> digits) {
  const auto a = sorted_unique(digits, "digit_polynomial");
  if (!a.empty() && a.front() < 0) throw PreconditionError("digit_polynomial: digits must be non-negative");
  if (a.empty()) return {};
  std::vector<BigInt> c(static_cast<std::size_t>(a.back()) + 1);
  for (auto x : a) c[static_cast<std::size_t>(x)] = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial cyclotomic_poly(std::int64_t s) {
  if (s < 1) throw PreconditionError("cyclotomic_poly: s must be >= 1");
  IntPolynomial numerator{1};
  IntPolynomial denominator{1};
  for (auto d : divisors(s)) {
    const int mu = moebius(s / d);
    if (mu == 1) numerator = numerator * IntPolynomial::x_pow_minus_one(d);
    else if (mu == -1) denominator = denominator * IntPolynomial::x_pow_minus_one(d);
  }
  auto [q, r] = divmod(numerator, denominator);
  if (!r.is_zero()) throw StructureError("cyclotomic_poly: Moebius quotient not exact");
  return q;
}

bool divides_cyclotomic(std::span<const std::int64_t> digits, std::int64_t s) {
  if (s < 1) throw PreconditionError("divides_cyclotomic: s must be >= 1");
  const IntPolynomial p = digit_polynomial(digits);
  if (p.is_zero()) return true;
  if (euler_totient(s) > p.degree()) return false;
  // reduce mod x^s - 1 first; Phi_s divides x^s - 1 so the remainder is unchanged
  std::vector<BigInt> folded(static_cast<std::size_t>(std::min<std::int64_t>(s, p.degree() + 1)));
  for (auto a : digits) folded[static_cast<std::size_t>(a % s)] += 1;
  return divides(cyclotomic_poly(s), IntPolynomial(std::move(folded)));
}

std::vector<std::int64_t> cyclotomic_divisors(std::span<const std::int64_t> digits) {
  const auto a = sorted_unique(digits, "cyclotomic_divisors");
  const std::int64_t deg = max_of(a);
  std::vector<std::int64_t> out;
  if (deg == 0) return out;
  // phi(s) >= sqrt(s/2), so phi(s) <= deg forces s <= 2 deg^2
  const std::int64_t limit = 2 * deg * deg + 2;
  const auto phi = totient_table(limit);
  for (std::int64_t s = 2; s <= limit; ++s) {
    if (phi[static_cast<std::size_t>(s)] > deg) continue;
    if (divides_cyclotomic(a, s)) out.push_back(s);
  }
  return out;
}

PrimePowerSet::PrimePowerSet(std::vector<PrimePower> elements) : elements_(std::move(elements)) {
  for (const auto& e : elements_) {
    if (!is_prime(e.prime) || e.exponent < 1) throw PreconditionError("PrimePowerSet: not a prime power");
  }
  std::sort(elements_.begin(), elements_.end(),
            [](const PrimePower& x, const PrimePower& y) { return x.value() < y.value(); });
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    if (elements_[i] == elements_[i - 1]) throw PreconditionError("PrimePowerSet: duplicate element");
  }
}

PrimePowerSet PrimePowerSet::from_values(std::span<const std::int64_t> values) {
  std::vector<PrimePower> e;
  for (auto v : values) {
    const auto pp = as_prime_power(v);
    if (!pp) throw PreconditionError("PrimePowerSet: " + std::to_string(v) + " is not a prime power");
    e.push_back({pp->prime, pp->exponent});
  }
  return PrimePowerSet(std::move(e));
}

std::vector<std::int64_t> PrimePowerSet::values() const {
  std::vector<std::int64_t> out;
  for (const auto& e : elements_) out.push_back(e.value());
  return out;
}

bool PrimePowerSet::contains(std::int64_t value) const {
  return std::any_of(elements_.begin(), elements_.end(), [&](const auto& e) { return e.value() == value; });
}

std::vector<std::int64_t> PrimePowerSet::primes() const {
  std::set<std::int64_t> p;
  for (const auto& e : elements_) p.insert(e.prime);
  return {p.begin(), p.end()};
}

PrimePowerSet compute_SA(std::span<const std::int64_t> digits) {
  const auto a = sorted_unique(digits, "compute_SA");
  const std::int64_t deg = max_of(a);
  std::vector<PrimePower> found;
  // phi(p^alpha) = p^{alpha-1}(p-1) <= deg bounds p^alpha by 2 deg
  for (std::int64_t v = 2; v <= 2 * deg; ++v) {
    const auto pp = as_prime_power(v);
    if (!pp) continue;
    if (ipow(pp->prime, pp->exponent - 1) * (pp->prime - 1) > deg) continue;
    if (divides_cyclotomic(a, v)) found.push_back({pp->prime, pp->exponent});
  }
  return PrimePowerSet(std::move(found));
}

bool check_T1(std::span<const std::int64_t> digits) { return check_T1(digits, compute_SA(digits)); }

bool check_T1(std::span<const std::int64_t> digits, const PrimePowerSet& sa) {
  BigInt product = 1;
  for (const auto& e : sa.elements()) product *= e.prime;  // Phi_{p^alpha}(1) = p
  return product == BigInt(digits.size());
}

std::optional<std::int64_t> find_T2_violation(std::span<const std::int64_t> digits, const PrimePowerSet& sa) {
  std::map<std::int64_t, std::vector<std::int64_t>> by_prime;
  for (const auto& e : sa.elements()) by_prime[e.prime].push_back(e.value());
  std::vector<std::vector<std::int64_t>> groups;
  for (auto& [p, vals] : by_prime) groups.push_back(vals);
  const std::size_t k = groups.size();
  if (k < 2) return std::nullopt;

  // every subset of primes of size >= 2, then every choice of one power per prime
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::uint64_t{1} << i)) chosen.push_back(i);
    }
    std::vector<std::size_t> idx(chosen.size(), 0);
    while (true) {
      std::int64_t product = 1;
      for (std::size_t t = 0; t < chosen.size(); ++t) product *= groups[chosen[t]][idx[t]];
      if (!divides_cyclotomic(digits, product)) return product;
      std::size_t t = 0;
      while (t < chosen.size() && ++idx[t] == groups[chosen[t]].size()) idx[t++] = 0;
      if (t == chosen.size()) break;
    }
  }
  return std::nullopt;
}

bool check_T2(std::span<const std::int64_t> digits) { return check_T2(digits, compute_SA(digits)); }

bool check_T2(std::span<const std::int64_t> digits, const PrimePowerSet& sa) {
  return !find_T2_violation(digits, sa).has_value();
}

FrequencySet laba_spectrum(std::span<const std::int64_t> digits) {
  const PrimePowerSet sa = compute_SA(digits);
  if (!check_T1(digits, sa)) {
    throw PreconditionError("laba_spectrum: (T1) fails, #A differs from the product of primes in S_A");
  }
  if (const auto bad = find_T2_violation(digits, sa)) {
    throw PreconditionError("laba_spectrum: (T2) fails, Phi_" + std::to_string(*bad) + " does not divide P_A");
  }
  std::vector<Rational> points{Rational(0)};
  for (const auto& e : sa.elements()) {
    std::vector<Rational> next;
    next.reserve(points.size() * static_cast<std::size_t>(e.prime));
    const std::int64_t s = e.value();
    for (const auto& x : points) {
      for (std::int64_t k = 0; k < e.prime; ++k) next.push_back(x + Rational(k, s));
    }
    points = std::move(next);
  }
  for (auto& x : points) x = frac_of(x);
  return FrequencySet(std::move(points));
}

bool verify_orthogonal_spectrum(std::span<const std::int64_t> digits, const FrequencySet& spectrum) {
  if (spectrum.size() != digits.size()) return false;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    for (std::size_t j = i + 1; j < spectrum.size(); ++j) {
      const BigInt den = denominator_of(spectrum[j] - spectrum[i]);
      if (den == 1) return false;
      if (den > BigInt(INT64_MAX)) return false;
      if (!divides_cyclotomic(digits, static_cast<std::int64_t>(den))) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::int64_t>> tiling_complement(std::span<const std::int64_t> a, std::int64_t n) {
  const auto sa = sorted_unique(a, "tiling_complement");
  if (n < 1) throw PreconditionError("tiling_complement: n must be positive");
  if (sa.empty() || sa.front() != 0) throw PreconditionError("tiling_complement: 0 must belong to A");
  if (sa.back() >= n) throw PreconditionError("tiling_complement: A must lie in {0, ..., n-1}");
  if (n % static_cast<std::int64_t>(sa.size()) != 0) return std::nullopt;

  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  std::vector<std::int64_t> b;
  std::int64_t next = 0;
  while (true) {
    while (next < n && covered[static_cast<std::size_t>(next)]) ++next;
    if (next == n) break;
    for (auto x : sa) {
      const std::int64_t t = next + x;
      if (t >= n || covered[static_cast<std::size_t>(t)]) return std::nullopt;
      covered[static_cast<std::size_t>(t)] = true;
    }
    b.push_back(next);
  }
  if (!verify_tiling(sa, b, n)) throw StructureError("tiling_complement: greedy result failed verification");
  return b;
}

bool verify_tiling(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::int64_t n) {
  if (n < 1) return false;
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (auto x : a) {
    for (auto y : b) {
      const std::int64_t t = x + y;
      if (t < 0 || t >= n) return false;
      if (++hits[static_cast<std::size_t>(t)] > 1) return false;
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

namespace {

// tile contains 1; returns (m, tile', complement')
LongDecomposition decompose(std::vector<std::int64_t> tile, std::vector<std::int64_t> comp, std::int64_t n) {
  std::sort(tile.begin(), tile.end());
  std::sort(comp.begin(), comp.end());
  if (comp.size() == 1) return {n, {0}, {0}, false};  // comp = {0}, tile = {0..n-1}

  const std::int64_t m = comp[1];
  std::vector<std::int64_t> tile_prime;
  for (auto t : tile) {
    if (t % m == 0) tile_prime.push_back(t / m);
  }
  std::vector<std::int64_t> rebuilt;
  for (auto t : tile_prime) {
    for (std::int64_t r = 0; r < m; ++r) rebuilt.push_back(m * t + r);
  }
  std::sort(rebuilt.begin(), rebuilt.end());
  if (rebuilt != tile) {
    throw StructureError("long_decomposition: A = m A' + N_m fails for m = " + std::to_string(m));
  }
  std::vector<std::int64_t> comp_prime;
  for (auto c : comp) {
    if (c % m != 0) {
      throw StructureError("long_decomposition: B = m B' fails for m = " + std::to_string(m));
    }
    comp_prime.push_back(c / m);
  }
  if (n % m != 0 || !verify_tiling(tile_prime, comp_prime, n / m)) {
    throw StructureError("long_decomposition: A' (+) B' = N_{n/m} fails for m = " + std::to_string(m));
  }
  return {m, std::move(tile_prime), std::move(comp_prime), false};
}

}  // namespace

LongDecomposition long_decomposition(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                                     std::int64_t n) {
  if (!verify_tiling(a, b, n)) throw PreconditionError("long_decomposition: A (+) B is not N_n");
  if (contains(a, 1)) return decompose({a.begin(), a.end()}, {b.begin(), b.end()}, n);
  if (contains(b, 1)) {
    LongDecomposition d = decompose({b.begin(), b.end()}, {a.begin(), a.end()}, n);
    std::swap(d.a_prime, d.b_prime);
    d.roles_swapped = true;
    return d;
  }
  throw PreconditionError("long_decomposition: 1 belongs to neither A nor B (n must be >= 2)");
}

PrimePowerSet scale_SA(const PrimePowerSet& sa, std::int64_t m) {
  if (m < 1) throw PreconditionError("scale_SA: m must be >= 1");
  std::vector<PrimePower> out;
  for (const auto& e : sa.elements()) {
    const int gamma = p_adic_valuation(m, e.prime);
    out.push_back({e.prime, e.exponent + gamma});
  }
  return PrimePowerSet(std::move(out));
}

PrimePowerSet scale_SA(std::span<const std::int64_t> digits, std::int64_t m) {
  return scale_SA(compute_SA(digits), m);
}

TileCertificate analyze_tile(std::span<const std::int64_t> a, std::int64_t n) {
  TileCertificate cert;
  cert.set = sorted_unique(a, "analyze_tile");
  cert.modulus = n;
  cert.complement = tiling_complement(cert.set, n);
  cert.sa = compute_SA(cert.set);
  cert.t1 = check_T1(cert.set, cert.sa);
  cert.t2 = check_T2(cert.set, cert.sa);
  if (cert.complement) {
    cert.complement_t1 = check_T1(*cert.complement);
    cert.complement_t2 = check_T2(*cert.complement);
  }
  if (cert.t1 && cert.t2) {
    FrequencySet spectrum = laba_spectrum(cert.set);
    if (!verify_orthogonal_spectrum(cert.set, spectrum)) {
      throw StructureError("analyze_tile: constructed spectrum failed exact verification");
    }
    cert.spectrum = std::move(spectrum);
  }
  return cert;
}

nlohmann::json to_json(const PrimePowerSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : s.elements()) {
    arr.push_back({{"value", e.value()}, {"prime", e.prime}, {"exponent", e.exponent}});
  }
  return arr;
}

nlohmann::json to_json(const TileCertificate& c) {
  nlohmann::json j;
  j["set"] = c.set;
  j["n"] = c.modulus;
  j["complement"] = c.complement ? nlohmann::json(*c.complement) : nlohmann::json(nullptr);
  j["T1"] = c.t1;
  j["T2"] = c.t2;
  j["S_A"] = to_json(c.sa);
  if (c.complement_t1) j["complement_T1"] = *c.complement_t1;
  if (c.complement_t2) j["complement_T2"] = *c.complement_t2;
  j["spectrum"] = c.spectrum ? nlohmann::json(to_strings(c.spectrum->values())) : nlohmann::json(nullptr);
  return j;
}

}  // namespace spectra_forge
