#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "spectra_forge/frequency_set.hpp"
#include "spectra_forge/measures.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// k distinct non-negative integers in [0, max_value] containing 0, sorted.
inline std::vector<std::int64_t> digit_set(Rng& rng, std::size_t k, std::int64_t max_value) {
  std::set<std::int64_t> s{0};
  while (s.size() < k) s.insert(uniform_int(rng, 1, max_value));
  return {s.begin(), s.end()};
}

/// p/q with 1 <= q <= max_den and |p/q| <= bound.
inline spectra_forge::Rational rational(Rng& rng, std::int64_t max_den, std::int64_t bound) {
  const auto q = uniform_int(rng, 1, max_den);
  return {uniform_int(rng, -bound * q, bound * q), q};
}

inline spectra_forge::FrequencySet frequencies(Rng& rng, std::size_t m, std::int64_t max_den, std::int64_t bound) {
  std::set<spectra_forge::Rational> s;
  while (s.size() < m) s.insert(rational(rng, max_den, bound));
  return spectra_forge::FrequencySet(std::vector<spectra_forge::Rational>(s.begin(), s.end()));
}

/// Positive rational weights summing to 1.
inline std::vector<spectra_forge::Rational> weights(Rng& rng, std::size_t k) {
  std::vector<std::int64_t> raw(k);
  std::int64_t total = 0;
  for (auto& w : raw) total += (w = uniform_int(rng, 1, 9));
  std::vector<spectra_forge::Rational> out;
  for (auto w : raw) out.emplace_back(w, total);
  return out;
}

inline spectra_forge::AtomicMeasure atomic(Rng& rng, std::size_t k, std::int64_t max_atom, bool uniform) {
  std::vector<spectra_forge::Rational> atoms;
  for (auto a : digit_set(rng, k, max_atom)) atoms.emplace_back(a);
  if (uniform) return spectra_forge::AtomicMeasure::uniform(std::move(atoms));
  return spectra_forge::AtomicMeasure(std::move(atoms), weights(rng, k));
}

}  // namespace gen
