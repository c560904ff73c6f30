#pragma once

// Frame ratios straight from the definition: for f on the atoms,
// sum_lambda |<f, e_lambda>|^2 / ||f||^2 with <f, g> = sum_c p_c f(c) conj(g(c)).

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

struct System {
  std::vector<double> atoms;
  std::vector<double> weights;
  std::vector<double> freqs;
};

using Vec = std::vector<std::complex<double>>;

inline std::complex<double> inner_with_exp(const System& s, const Vec& f, double lambda) {
  std::complex<double> acc{};
  for (std::size_t c = 0; c < s.atoms.size(); ++c) {
    acc += s.weights[c] * f[c] * std::polar(1.0, -2.0 * std::numbers::pi * lambda * s.atoms[c]);
  }
  return acc;
}

inline double norm2(const System& s, const Vec& f) {
  double acc = 0.0;
  for (std::size_t c = 0; c < f.size(); ++c) acc += s.weights[c] * std::norm(f[c]);
  return acc;
}

inline double ratio(const System& s, const Vec& f) {
  double acc = 0.0;
  for (double l : s.freqs) acc += std::norm(inner_with_exp(s, f, l));
  return acc / norm2(s, f);
}

// (S f)(c) = sum_lambda <f, e_lambda> e_lambda(c): self-adjoint on L^2(p)
inline Vec frame_apply(const System& s, const Vec& f) {
  Vec out(f.size());
  for (double l : s.freqs) {
    const auto coeff = inner_with_exp(s, f, l);
    for (std::size_t c = 0; c < f.size(); ++c) {
      out[c] += coeff * std::polar(1.0, 2.0 * std::numbers::pi * l * s.atoms[c]);
    }
  }
  return out;
}

inline Vec random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec f(n);
  for (auto& v : f) v = {g(rng), g(rng)};
  return f;
}

struct RatioRange {
  double min = INFINITY;
  double max = 0.0;
};

inline RatioRange sample_ratios(const System& s, int samples, std::mt19937_64& rng) {
  RatioRange r;
  for (int i = 0; i < samples; ++i) {
    const double q = ratio(s, random_vector(s.atoms.size(), rng));
    r.min = std::min(r.min, q);
    r.max = std::max(r.max, q);
  }
  return r;
}

/// Extremes of the ratio by iterating f <- S f (largest) and f <- (shift - S) f
/// (smallest) from several random starts.
inline RatioRange optimize_ratios(const System& s, int starts, int iterations, std::mt19937_64& rng) {
  RatioRange r;
  double shift = 0.0;
  for (int k = 0; k < starts; ++k) {
    Vec f = random_vector(s.atoms.size(), rng);
    for (int it = 0; it < iterations; ++it) {
      f = frame_apply(s, f);
      const double n = std::sqrt(norm2(s, f));
      if (n == 0.0) break;
      for (auto& v : f) v /= n;
    }
    r.max = std::max(r.max, ratio(s, f));
  }
  shift = r.max * 1.0001 + 1e-12;
  for (int k = 0; k < starts; ++k) {
    Vec f = random_vector(s.atoms.size(), rng);
    for (int it = 0; it < iterations; ++it) {
      const Vec sf = frame_apply(s, f);
      for (std::size_t c = 0; c < f.size(); ++c) f[c] = shift * f[c] - sf[c];
      const double n = std::sqrt(norm2(s, f));
      if (n == 0.0) break;
      for (auto& v : f) v /= n;
    }
    r.min = std::min(r.min, ratio(s, f));
  }
  return r;
}

}  // namespace oracle
