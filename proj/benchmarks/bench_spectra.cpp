#include <benchmark/benchmark.h>

#include <vector>

#include "spectra_forge/convolution.hpp"
#include "spectra_forge/spectra.hpp"

using namespace spectra_forge;

static void BM_ZeroSetMembership(benchmark::State& state) {
  const auto desc = zero_set_descriptor(SelfSimilarMeasure({0, 2}, 6));
  std::int64_t l = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeroset_membership(desc, Rational(3, 2) - (l++ % 1000000)));
  }
}
BENCHMARK(BM_ZeroSetMembership);

static void BM_SelfSimilarBiZero(benchmark::State& state) {
  const SelfSimilarMeasure mu({0, 2}, 4);
  const auto lam = selfsimilar_spectrum(mu, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_bizero(lam, mu));
}
BENCHMARK(BM_SelfSimilarBiZero)->Arg(4)->Arg(6)->Arg(8);

static void BM_JpScan(benchmark::State& state) {
  const SelfSimilarMeasure mu({0, 2}, 4);
  const auto lam = selfsimilar_spectrum(mu, static_cast<int>(state.range(0)));
  std::vector<double> grid;
  for (int i = 0; i < 512; ++i) grid.push_back(i / 512.0);
  for (auto _ : state) benchmark::DoNotOptimize(jp_scan(Measure{mu}, lam, grid));
}
BENCHMARK(BM_JpScan)->Arg(3)->Arg(5);

static void BM_RieszEvidence(benchmark::State& state) {
  const ConvolutionMeasure mu(AtomicMeasure({Rational(0), Rational(1)}, {Rational(1, 3), Rational(2, 3)}), 1,
                              SelfSimilarMeasure({0, 1}, 4));
  const std::vector<int> depths{1, 2, 3, 4};
  for (auto _ : state) benchmark::DoNotOptimize(riesz_evidence(mu, depths));
}
BENCHMARK(BM_RieszEvidence);
BENCHMARK_MAIN();
