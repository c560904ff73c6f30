#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "spectra_forge/convolution.hpp"
#include "spectra_forge/errors.hpp"

using namespace spectra_forge;

namespace {

const std::vector<SelfSimilarMeasure> kSpectralFactors{
    SelfSimilarMeasure({0, 1}, 4), SelfSimilarMeasure({0, 2}, 4), SelfSimilarMeasure({0, 1, 2}, 6),
    SelfSimilarMeasure({0, 3}, 6), SelfSimilarMeasure({0, 1}, 2)};

}  // namespace

TEST(ConvolutionProperties, FactorizationInvertsAssembly) {
  gen::Rng rng(21);
  int built = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto& nu = kSpectralFactors[static_cast<std::size_t>(trial) % kSpectralFactors.size()];
    const auto c = gen::digit_set(rng, static_cast<std::size_t>(gen::uniform_int(rng, 1, 3)), 6);
    const auto q = gen::uniform_int(rng, 1, 2);
    const ConvolutionMeasure mu(AtomicMeasure::uniform(std::vector<Rational>(c.begin(), c.end())), q, nu);
    if (!zero_set_hypothesis(ContinuousFactor{nu}, q)) continue;
    const auto uc = classify_uniform(mu.dilated_discrete().integer_atoms());
    if (uc.verdict != DiscreteVerdict::spectral) continue;
    const auto gen = default_generator(ContinuousFactor{nu});
    ConvolutionOrthogonality r;
    try {
      r = spectrum_convolution(mu, *uc.spectrum, gen, 2);
    } catch (const PreconditionError&) {
      continue;
    }
    ++built;
    const auto f = factor_spectrum(r.spectrum, q);
    std::vector<Rational> expected;
    for (const auto& x : *uc.spectrum) expected.push_back(frac_of(x * q) / q);
    EXPECT_EQ(f.discrete_part, FrequencySet(std::move(expected)));
    EXPECT_EQ(f.discrete_part.size(), uc.spectrum->size());
    std::size_t total = 0;
    for (const auto& [s, cls] : f.classes) {
      total += cls.size();
      for (const auto& l : cls) EXPECT_TRUE(r.spectrum.contains(s + l));
    }
    EXPECT_EQ(total, r.spectrum.size());
  }
  EXPECT_GT(built, 10);
}

TEST(ConvolutionProperties, TransformFactorizes) {
  gen::Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const auto eta = gen::atomic(rng, static_cast<std::size_t>(gen::uniform_int(rng, 1, 4)), 8, false);
    const auto q = gen::uniform_int(rng, 1, 3);
    const ContinuousFactor nu = trial % 2 == 0 ? ContinuousFactor{UnitIntervalLebesgue{}}
                                               : ContinuousFactor{kSpectralFactors[trial % kSpectralFactors.size()]};
    const ConvolutionMeasure mu(eta, q, nu);
    const double xi = gen::uniform_int(rng, -4000, 4000) / 100.0;
    const auto v = ft_convolution(mu, xi).value;
    const auto expect = mask_eval(eta, q * xi) * ft_continuous(nu, xi).value;
    EXPECT_NEAR(std::abs(v - expect), 0.0, 1e-10);
  }
}

TEST(ConvolutionProperties, JpSumGrowsWithTheTruncation) {
  const SelfSimilarMeasure mu({0, 2}, 4);
  std::vector<double> grid;
  for (int i = 0; i < 32; ++i) grid.push_back(i / 32.0);
  std::vector<double> previous(grid.size(), 0.0);
  for (int j = 1; j <= 5; ++j) {
    const auto r = jp_scan(Measure{mu}, selfsimilar_spectrum(mu, j), grid);
    EXPECT_TRUE(r.bessel_ok);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      EXPECT_GE(r.points[i].q, previous[i] - 1e-12);
      previous[i] = r.points[i].q;
    }
  }
}

TEST(ConvolutionProperties, GramEvidenceIsDepthStable) {
  gen::Rng rng(23);
  for (int trial = 0; trial < 6; ++trial) {
    const auto eta = gen::atomic(rng, 2, 1, false);
    const ConvolutionMeasure mu(eta, 1, SelfSimilarMeasure({0, 1}, 4));
    const std::vector<int> depths{1, 2, 3};
    const auto ev = riesz_evidence(mu, depths);
    EXPECT_TRUE(ev.floor_ok);
    EXPECT_TRUE(ev.stable);
  }
}
