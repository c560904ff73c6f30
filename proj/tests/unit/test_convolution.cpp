#include <gtest/gtest.h>

#include <cmath>

#include "spectra_forge/convolution.hpp"
#include "spectra_forge/errors.hpp"

using namespace spectra_forge;

namespace {

FrequencySet freqs(std::initializer_list<std::pair<int, int>> v) {
  std::vector<Rational> out;
  for (auto [p, q] : v) out.emplace_back(p, q);
  return FrequencySet(std::move(out));
}

AtomicMeasure uniform_on(std::initializer_list<int> atoms) {
  std::vector<Rational> a;
  for (int x : atoms) a.emplace_back(x);
  return AtomicMeasure::uniform(std::move(a));
}

const AtomicMeasure kWeighted({Rational(0), Rational(1)}, {Rational(1, 3), Rational(2, 3)});
const SelfSimilarMeasure kQuarterBinary({0, 1}, 4);

}  // namespace

TEST(Generators, Truncation) {
  EXPECT_EQ(truncate(LatticeGenerator{}, 2), freqs({{-2, 1}, {-1, 1}, {0, 1}, {1, 1}, {2, 1}}));
  EXPECT_EQ(truncate(default_generator(ContinuousFactor{kQuarterBinary}), 2),
            freqs({{0, 1}, {2, 1}, {8, 1}, {10, 1}}));
  const auto j = to_json(default_generator(ContinuousFactor{UnitIntervalLebesgue{}}));
  EXPECT_EQ(j["type"], "lattice");
}

TEST(RieszSpectrumConvolution, StackedIntervals) {
  const auto cs = riesz_spectrum_convolution(uniform_on({0, 1}), 1, LatticeGenerator{}, 1);
  EXPECT_EQ(cs.discrete_part, freqs({{0, 1}, {1, 2}}));
  EXPECT_EQ(cs.assembled.size(), 6u);
  EXPECT_TRUE(cs.assembled.contains(Rational(-1, 2)));
  EXPECT_NEAR(std::abs(cs.witness_determinant), 2.0, 1e-12);
}

TEST(RieszSpectrumConvolution, WeightedCantorExample) {
  const auto cs = riesz_spectrum_convolution(kWeighted, 1, default_generator(ContinuousFactor{kQuarterBinary}), 2);
  EXPECT_EQ(cs.discrete_part, freqs({{0, 1}, {1, 2}}));
  EXPECT_EQ(cs.assembled, freqs({{0, 1}, {1, 2}, {2, 1}, {5, 2}, {8, 1}, {17, 2}, {10, 1}, {21, 2}}));
}

TEST(RieszSpectrumConvolution, TrivialDiscreteFactor) {
  const auto gen = default_generator(ContinuousFactor{kQuarterBinary});
  const auto cs = riesz_spectrum_convolution(uniform_on({0}), 1, gen, 3);
  EXPECT_EQ(cs.assembled, truncate(gen, 3));
}

TEST(RieszSpectrumConvolution, RejectsNonIntegerGenerator) {
  EXPECT_THROW(riesz_spectrum_convolution(uniform_on({0, 1}), 1, LatticeGenerator{Rational(1, 2)}, 1),
               StructureError);
  EXPECT_NO_THROW(riesz_spectrum_convolution(uniform_on({0, 1}), 2, LatticeGenerator{Rational(1, 2)}, 1));
}

TEST(ZeroSetHypothesis, Cases) {
  EXPECT_TRUE(zero_set_hypothesis(ContinuousFactor{UnitIntervalLebesgue{}}, 1));
  EXPECT_TRUE(zero_set_hypothesis(ContinuousFactor{kQuarterBinary}, 1));
  const SelfSimilarMeasure sixth({0, 2}, 6);
  EXPECT_FALSE(zero_set_hypothesis(ContinuousFactor{sixth}, 1));
  EXPECT_TRUE(zero_set_hypothesis(ContinuousFactor{sixth}, 2));
}

TEST(SpectrumConvolution, UniformPairWithCantor) {
  const ConvolutionMeasure mu(uniform_on({0, 1}), 1, kQuarterBinary);
  const auto gen = default_generator(ContinuousFactor{kQuarterBinary});
  const auto r = spectrum_convolution(mu, freqs({{0, 1}, {1, 2}}), gen, 3);
  EXPECT_EQ(r.spectrum, direct_sum(freqs({{0, 1}, {1, 2}}), truncate(gen, 3)));
  const std::size_t n = r.spectrum.size();
  EXPECT_EQ(r.counts.discrete + r.counts.continuous, n * (n - 1) / 2);
  EXPECT_GT(r.counts.discrete, 0u);
  EXPECT_GT(r.counts.continuous, 0u);
}

TEST(SpectrumConvolution, TrivialDiscretePart) {
  const ConvolutionMeasure mu(uniform_on({0}), 1, kQuarterBinary);
  const auto gen = default_generator(ContinuousFactor{kQuarterBinary});
  EXPECT_EQ(spectrum_convolution(mu, freqs({{0, 1}}), gen, 3).spectrum, truncate(gen, 3));
}

TEST(SpectrumConvolution, RejectsEachFailedPrecondition) {
  const auto gen = default_generator(ContinuousFactor{kQuarterBinary});
  const ConvolutionMeasure weighted(kWeighted, 1, kQuarterBinary);
  EXPECT_THROW(spectrum_convolution(weighted, freqs({{0, 1}, {1, 2}}), gen, 2), PreconditionError);
  const ConvolutionMeasure pair(uniform_on({0, 1}), 1, kQuarterBinary);
  EXPECT_THROW(spectrum_convolution(pair, freqs({{0, 1}, {1, 3}, {2, 3}}), gen, 2), PreconditionError);
  EXPECT_THROW(spectrum_convolution(pair, freqs({{0, 1}, {1, 4}}), gen, 2), PreconditionError);
  const SelfSimilarMeasure sixth({0, 2}, 6);
  const ConvolutionMeasure bad_hyp(uniform_on({0, 1}), 1, sixth);
  EXPECT_THROW(spectrum_convolution(bad_hyp, freqs({{0, 1}, {1, 2}}), LatticeGenerator{}, 2), PreconditionError);
  EXPECT_THROW(spectrum_convolution(pair, freqs({{0, 1}, {1, 2}}), LatticeGenerator{}, 2), PreconditionError);
}

TEST(SpectrumConvolution, LebesgueWithThreeAtoms) {
  const ConvolutionMeasure mu(uniform_on({0, 1, 2}), 1, UnitIntervalLebesgue{});
  const auto r = spectrum_convolution(mu, freqs({{0, 1}, {1, 3}, {2, 3}}), LatticeGenerator{}, 2);
  EXPECT_EQ(r.spectrum.size(), 15u);
}

TEST(FactorSpectrum, Examples) {
  const auto a = factor_spectrum(freqs({{0, 1}, {1, 2}, {1, 1}, {3, 2}}), 1);
  EXPECT_EQ(a.discrete_part, freqs({{0, 1}, {1, 2}}));
  ASSERT_EQ(a.classes.size(), 2u);
  EXPECT_EQ(a.classes[0].second, freqs({{0, 1}, {1, 1}}));
  EXPECT_EQ(a.classes[1].second, freqs({{0, 1}, {1, 1}}));

  const auto b = factor_spectrum(freqs({{0, 1}, {3, 1}, {-7, 1}}), 1);
  EXPECT_EQ(b.discrete_part, freqs({{0, 1}}));
  EXPECT_EQ(b.classes.size(), 1u);

  const auto c = factor_spectrum(freqs({{0, 1}, {1, 4}, {5, 4}, {3, 2}}), 2);
  EXPECT_EQ(c.discrete_part, freqs({{0, 1}, {1, 4}}));
  ASSERT_EQ(c.classes.size(), 2u);
  EXPECT_EQ(c.classes[0].first, Rational(0));
  EXPECT_EQ(c.classes[0].second, freqs({{0, 1}, {3, 2}}));
  EXPECT_EQ(c.classes[1].first, Rational(1, 4));
  EXPECT_EQ(c.classes[1].second, freqs({{0, 1}, {1, 1}}));
}

TEST(NonspectralCertificate, Examples) {
  const auto weighted = nonspectral_certificate(ConvolutionMeasure(kWeighted, 1, kQuarterBinary));
  EXPECT_EQ(weighted.verdict, Verdict::not_spectral);
  EXPECT_FALSE(weighted.witnesses["uniform_weights"].get<bool>());
  EXPECT_NO_THROW(weighted.validate());

  const auto pair = nonspectral_certificate(ConvolutionMeasure(uniform_on({0, 1}), 1, kQuarterBinary));
  EXPECT_EQ(pair.verdict, Verdict::spectral);
  EXPECT_EQ(pair.witnesses["discrete_part"], nlohmann::json::array({"0", "1/2"}));

  const auto triple = nonspectral_certificate(ConvolutionMeasure(uniform_on({0, 1, 3}), 1, kQuarterBinary));
  EXPECT_EQ(triple.verdict, Verdict::not_spectral);

  const SelfSimilarMeasure sixth({0, 2}, 6);
  EXPECT_THROW(nonspectral_certificate(ConvolutionMeasure(uniform_on({0, 1}), 1, sixth)), PreconditionError);

  // {0,1,3} does not tile {0,1,2,3}: no spectrum tower for nu
  const auto unknown =
      nonspectral_certificate(ConvolutionMeasure(uniform_on({0, 1}), 1, SelfSimilarMeasure({0, 1, 3}, 4)));
  EXPECT_EQ(unknown.verdict, Verdict::inconclusive);
  EXPECT_FALSE(unknown.reason.empty());
}

TEST(IntervalUnion, Examples) {
  const std::vector<ClosedInterval> two{{Rational(0), Rational(1, 2)}, {Rational(1), Rational(3, 2)}};
  const auto a = interval_union_rspectrum(two);
  EXPECT_EQ(a.r, 2);
  EXPECT_EQ(a.s, 0);
  EXPECT_EQ(a.offsets, (std::vector<std::int64_t>{0, 2}));
  EXPECT_EQ(a.discrete_part, freqs({{0, 1}, {1, 3}}));
  EXPECT_TRUE(a.validated);
  for (const auto& sec : a.sections) {
    EXPECT_GE(sec.min_eigenvalue, 0.5 - 1e-9);
    EXPECT_LE(sec.max_eigenvalue, 1.5 + 1e-9);
  }

  const std::vector<ClosedInterval> unit{{Rational(0), Rational(1)}};
  const auto b = interval_union_rspectrum(unit);
  EXPECT_EQ(b.r, 1);
  EXPECT_EQ(b.offsets, (std::vector<std::int64_t>{0}));
  for (const auto& sec : b.sections) EXPECT_NEAR(sec.min_eigenvalue, 1.0, 1e-12);

  const std::vector<ClosedInterval> shifted{{Rational(-1, 3), Rational(0)}, {Rational(1, 3), Rational(2, 3)}};
  const auto c = interval_union_rspectrum(shifted);
  EXPECT_EQ(c.r, 3);
  EXPECT_EQ(c.s, 1);
  EXPECT_EQ(c.offsets, (std::vector<std::int64_t>{0, 2}));

  const std::vector<ClosedInterval> overlap{{Rational(0), Rational(1)}, {Rational(1, 2), Rational(2)}};
  EXPECT_THROW(interval_union_rspectrum(overlap), PreconditionError);
}

TEST(RieszEvidence, WeightedCantorExample) {
  const ConvolutionMeasure mu(kWeighted, 1, kQuarterBinary);
  const std::vector<int> depths{1, 2, 3};
  const auto ev = riesz_evidence(mu, depths);
  ASSERT_EQ(ev.sections.size(), 3u);
  EXPECT_TRUE(ev.floor_ok);
  EXPECT_TRUE(ev.stable);
  EXPECT_GT(ev.epsilon0, 0.5);
  EXPECT_LT(ev.largest, 1.5);
  const auto j = to_json(ev);
  EXPECT_EQ(j["sections"].size(), 3u);
}
