#include <gtest/gtest.h>

#include <numeric>

#include "generators.hpp"
#include "oracles/bizero_oracle.hpp"
#include "spectra_forge/spectra.hpp"

using namespace spectra_forge;
using Digits = std::vector<std::int64_t>;

namespace {

AtomicMeasure uniform_on(const Digits& c) {
  return AtomicMeasure::uniform(std::vector<Rational>(c.begin(), c.end()));
}

std::int64_t gcd_all(const Digits& c) {
  std::int64_t g = 0;
  for (auto x : c) g = std::gcd(g, x);
  return g;
}

}  // namespace

TEST(ClassifierProperties, Classify3MatchesBruteForce) {
  for (std::int64_t c1 = 1; c1 <= 12; ++c1) {
    for (std::int64_t c2 = c1 + 1; c2 <= 12; ++c2) {
      const Digits c{0, c1, c2};
      if (gcd_all(c) != 1) continue;
      EXPECT_EQ(classify_3(c).spectral, oracle::has_full_bizero(c)) << c1 << "," << c2;
    }
  }
}

TEST(ClassifierProperties, Classify4MatchesBruteForce) {
  for (std::int64_t c1 = 1; c1 <= 12; ++c1) {
    for (std::int64_t c2 = c1 + 1; c2 <= 12; ++c2) {
      for (std::int64_t c3 = c2 + 1; c3 <= 12; ++c3) {
        const Digits c{0, c1, c2, c3};
        if (gcd_all(c) != 1) continue;
        EXPECT_EQ(classify_4(c).spectral, oracle::has_full_bizero(c)) << c1 << "," << c2 << "," << c3;
      }
    }
  }
}

TEST(ClassifierProperties, PositiveSpectraValidateExactly) {
  gen::Rng rng(77);
  int positives = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t k = trial % 2 == 0 ? 3 : 4;
    const auto c = gen::digit_set(rng, k, 30);
    if (gcd_all(c) != 1) continue;
    const auto r = k == 3 ? classify_3(c) : classify_4(c);
    if (!r.spectral) continue;
    ++positives;
    ASSERT_TRUE(r.spectrum.has_value());
    EXPECT_TRUE(spectral_discrete_check(uniform_on(c), *r.spectrum));
  }
  EXPECT_GT(positives, 20);
}

TEST(ClassifierProperties, UniformClassificationIsScaleInvariant) {
  gen::Rng rng(78);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = gen::digit_set(rng, static_cast<std::size_t>(gen::uniform_int(rng, 1, 6)), 15);
    const auto m = gen::uniform_int(rng, 1, 5);
    Digits scaled;
    for (auto x : c) scaled.push_back(x * m);
    const auto a = classify_uniform(c);
    const auto b = classify_uniform(scaled);
    EXPECT_EQ(a.verdict, b.verdict);
    if (b.spectrum) EXPECT_TRUE(spectral_discrete_check(uniform_on(scaled), *b.spectrum));
  }
}

TEST(ClassifierProperties, SpectraAreTranslationInvariant) {
  gen::Rng rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = gen::digit_set(rng, 3, 20);
    if (gcd_all(c) != 1) continue;
    const auto r = classify_3(c);
    if (!r.spectral) continue;
    const Rational t = gen::rational(rng, 9, 3);
    std::vector<Rational> moved;
    for (const auto& l : *r.spectrum) moved.push_back(l + t);
    EXPECT_TRUE(spectral_discrete_check(uniform_on(c), FrequencySet(std::move(moved))));
  }
}
