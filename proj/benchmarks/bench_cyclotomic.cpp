#include <benchmark/benchmark.h>

#include "spectra_forge/cyclotomic.hpp"

using namespace spectra_forge;

static void BM_CyclotomicPoly(benchmark::State& state) {
  const auto s = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(cyclotomic_poly(s));
}
BENCHMARK(BM_CyclotomicPoly)->Arg(30)->Arg(105)->Arg(210)->Arg(1155);

static void BM_DividesCyclotomic(benchmark::State& state) {
  std::vector<std::int64_t> digits;
  for (std::int64_t k = 0; k < state.range(0); ++k) digits.push_back(k * 3);
  for (auto _ : state) benchmark::DoNotOptimize(divides_cyclotomic(digits, 9));
}
BENCHMARK(BM_DividesCyclotomic)->Arg(8)->Arg(64)->Arg(512);

static void BM_AnalyzeTile(benchmark::State& state) {
  const std::vector<std::int64_t> a{0, 1, 8, 9, 16, 17};
  for (auto _ : state) benchmark::DoNotOptimize(analyze_tile(a, 24));
}
BENCHMARK(BM_AnalyzeTile);
