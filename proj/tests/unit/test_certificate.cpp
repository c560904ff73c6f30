#include <gtest/gtest.h>

#include "spectra_forge/certificate.hpp"
#include "spectra_forge/errors.hpp"

using namespace spectra_forge;

TEST(Verdict, NamesRoundTrip) {
  for (auto v : {Verdict::spectral, Verdict::riesz_evidence, Verdict::frame, Verdict::not_spectral,
                 Verdict::no_tiling, Verdict::inconclusive}) {
    EXPECT_EQ(verdict_from_string(to_string(v)), v);
  }
  EXPECT_EQ(to_string(Verdict::no_tiling), "no_tiling");
  EXPECT_THROW(verdict_from_string("maybe"), ParseError);
}

TEST(Certificate, JsonRoundTrip) {
  Certificate c;
  c.verdict = Verdict::not_spectral;
  c.witnesses["weights"] = {"1/3", "2/3"};
  c.provenance = "weight test";
  c.policy.depth = 5;
  c.policy.seed = 17;
  c.reason = "non-uniform";
  const auto j = to_json(c);
  EXPECT_EQ(j["verdict"], "not_spectral");
  EXPECT_EQ(j["policy"]["depth"], 5);
  EXPECT_FALSE(j["policy"].contains("tolerance"));
  const auto back = certificate_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.verdict, c.verdict);
  EXPECT_EQ(back.witnesses, c.witnesses);
  EXPECT_EQ(back.provenance, c.provenance);
  EXPECT_EQ(back.policy.depth, c.policy.depth);
  EXPECT_EQ(back.policy.seed, c.policy.seed);
  EXPECT_EQ(back.reason, c.reason);
}

TEST(Certificate, Validation) {
  Certificate empty;
  empty.verdict = Verdict::spectral;
  EXPECT_THROW(empty.validate(), StructureError);

  Certificate silent;
  silent.witnesses["x"] = 1;
  EXPECT_THROW(silent.validate(), StructureError);
  silent.reason = "depth too small";
  EXPECT_NO_THROW(silent.validate());
}

TEST(Certificate, RejectsMalformedJson) {
  EXPECT_THROW(certificate_from_json(nlohmann::json::parse(R"({"witnesses":{}})")), ParseError);
  EXPECT_THROW(certificate_from_json(nlohmann::json::parse(R"({"verdict":"spectral","witnesses":[]})")), ParseError);
}
