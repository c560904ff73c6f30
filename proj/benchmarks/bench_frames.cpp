#include <benchmark/benchmark.h>

#include "spectra_forge/frames.hpp"

using namespace spectra_forge;

static void BM_FrameBounds(benchmark::State& state) {
  const auto n = state.range(0);
  std::vector<Rational> atoms;
  std::vector<std::int64_t> ints;
  for (std::int64_t k = 0; k < n; ++k) {
    atoms.emplace_back(k * 2);
    ints.push_back(k * 2);
  }
  const ExponentialSystem sys{AtomicMeasure::uniform(atoms), find_riesz_spectrum(ints)};
  for (auto _ : state) benchmark::DoNotOptimize(frame_bounds(sys));
}
BENCHMARK(BM_FrameBounds)->Arg(4)->Arg(16)->Arg(64);

static void BM_FindRieszSpectrumRandom(benchmark::State& state) {
  const std::vector<std::int64_t> c{0, 1, 3, 7, 12};
  RieszSearchOptions opt;
  opt.strategy = SearchStrategy::random;
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_riesz_spectrum(c, opt));
    ++opt.seed;
  }
}
BENCHMARK(BM_FindRieszSpectrumRandom);
