#include "spectra_forge/frames.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "spectra_forge/errors.hpp"

namespace spectra_forge {

namespace {

// V[lambda, c] = e^{-2 pi i lambda c} W, m x n, arguments reduced exactly
Eigen::MatrixXcd analysis_matrix(const ExponentialSystem& sys) {
  const auto& atoms = sys.measure.atoms();
  const auto w = sys.measure.weights_double();
  const std::size_t m = sys.frequencies.size();
  const std::size_t n = atoms.size();
  Eigen::MatrixXcd vw(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      vw(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          unit_exp(-(sys.frequencies[i] * atoms[j])) * std::sqrt(w[j]);
    }
  }
  return vw;
}

}  // namespace

Eigen::MatrixXcd frame_operator(const ExponentialSystem& sys) {
  if (sys.frequencies.empty()) throw PreconditionError("frame_operator: empty frequency set");
  const Eigen::MatrixXcd vw = analysis_matrix(sys);
  return vw.adjoint() * vw;
}

FrameBounds frame_bounds(const ExponentialSystem& sys) {
  const Eigen::MatrixXcd g = frame_operator(sys);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(g, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw StructureError("frame_bounds: eigen-decomposition failed");
  const auto& ev = solver.eigenvalues();
  FrameBounds fb;
  fb.lower = std::max(0.0, ev.minCoeff());
  fb.upper = std::max(0.0, ev.maxCoeff());
  fb.optimal = true;
  return fb;
}

bool is_riesz_spectrum(const ExponentialSystem& sys, double relative_tolerance) {
  if (sys.frequencies.size() != sys.measure.size()) return false;
  const FrameBounds fb = frame_bounds(sys);
  return fb.lower > relative_tolerance * fb.upper;
}

std::complex<double> exponential_determinant(std::span<const std::int64_t> atoms, const FrequencySet& freqs) {
  if (atoms.size() != freqs.size()) throw PreconditionError("exponential_determinant: system is not square");
  const auto n = static_cast<Eigen::Index>(atoms.size());
  Eigen::MatrixXcd mat(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      mat(i, j) = unit_exp(freqs[static_cast<std::size_t>(i)] * Rational(atoms[static_cast<std::size_t>(j)]));
    }
  }
  return mat.partialPivLu().determinant();
}

FrequencySet find_riesz_spectrum(std::span<const std::int64_t> atoms, const RieszSearchOptions& options) {
  if (atoms.empty()) throw PreconditionError("find_riesz_spectrum: empty atom set");
  std::vector<std::int64_t> c(atoms.begin(), atoms.end());
  std::sort(c.begin(), c.end());
  if (c.front() < 0) throw PreconditionError("find_riesz_spectrum: atoms must be non-negative");
  if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
    throw PreconditionError("find_riesz_spectrum: atoms must be distinct");
  }
  const auto measure = AtomicMeasure::uniform(std::vector<Rational>(c.begin(), c.end()));
  const std::size_t n = c.size();

  if (options.strategy == SearchStrategy::deterministic) {
    const std::int64_t big_n = c.back() + 1;
    std::vector<Rational> lambda;
    for (std::size_t k = 0; k < n; ++k) lambda.emplace_back(static_cast<long long>(k), big_n);
    FrequencySet result(std::move(lambda));
    if (!is_riesz_spectrum({measure, result})) {
      throw StructureError("find_riesz_spectrum: Vandermonde spectrum failed validation");
    }
    return result;
  }

  if (options.max_denominator < 2) throw PreconditionError("find_riesz_spectrum: max_denominator must be >= 2");
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::int64_t> den_dist(2, options.max_denominator);
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::set<Rational> picked{Rational(0)};
    while (picked.size() < n) {
      const std::int64_t d = den_dist(rng);
      std::uniform_int_distribution<std::int64_t> num_dist(1, d - 1);
      picked.insert(Rational(num_dist(rng), d));
    }
    FrequencySet candidate(std::vector<Rational>(picked.begin(), picked.end()));
    if (std::abs(exponential_determinant(c, candidate)) <= options.determinant_tolerance) continue;
    if (is_riesz_spectrum({measure, candidate})) return candidate;
  }
  throw RetryBudgetExceeded("find_riesz_spectrum: no invertible system within the retry budget");
}

FrameRatioSample sample_frame_ratios(const ExponentialSystem& sys, int samples, std::uint64_t seed) {
  if (samples < 1) throw PreconditionError("sample_frame_ratios: need at least one sample");
  const Eigen::MatrixXcd vw = analysis_matrix(sys);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  FrameRatioSample out;
  out.min_ratio = std::numeric_limits<double>::infinity();
  out.max_ratio = 0.0;
  Eigen::VectorXcd u(vw.cols());
  for (int s = 0; s < samples; ++s) {
    for (Eigen::Index k = 0; k < u.size(); ++k) u(k) = {normal(rng), normal(rng)};
    u.normalize();
    const double ratio = (vw * u).squaredNorm();
    out.min_ratio = std::min(out.min_ratio, ratio);
    out.max_ratio = std::max(out.max_ratio, ratio);
  }
  out.samples = samples;
  return out;
}

std::vector<DensitySample> beurling_lower_density_proxy(std::span<const double> points, double lo, double hi,
                                                        std::span<const double> h_values) {
  if (!(hi > lo)) throw PreconditionError("density proxy: empty window");
  std::vector<double> pts;
  for (double p : points) {
    if (p >= lo && p <= hi) pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end());

  auto count = [&](double t, double h) {
    const auto first = std::lower_bound(pts.begin(), pts.end(), t);
    const auto last = std::lower_bound(pts.begin(), pts.end(), t + h);
    return static_cast<double>(last - first);
  };

  std::vector<DensitySample> out;
  for (double h : h_values) {
    if (!(h > 0.0) || h > (hi - lo) / 4.0) {
      throw PreconditionError("density proxy: need 0 < h <= (hi - lo)/4");
    }
    const double t_max = hi - h;
    // the count only changes where t passes a point or t + h passes a point
    std::vector<double> events{lo, t_max};
    for (double p : pts) {
      if (p >= lo && p <= t_max) events.push_back(p);
      if (p - h >= lo && p - h <= t_max) events.push_back(p - h);
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < events.size(); ++i) {
      best = std::min(best, count(events[i], h));
      if (i + 1 < events.size()) best = std::min(best, count(0.5 * (events[i] + events[i + 1]), h));
    }
    out.push_back({h, best / h});
  }
  return out;
}

}  // namespace spectra_forge
