#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using nlohmann::json;
namespace cli = spectra_forge::cli;

namespace {

struct Outcome {
  int code;
  json doc;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  json doc;
  if (!out.str().empty() && out.str().front() == '{') doc = json::parse(out.str());
  return {code, doc, err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("spectra_forge_cli_" + name);
}

}  // namespace

TEST(Cli, SpectrumFindThreeAtoms) {
  const auto r = run({"spectrum-find", "--atoms", "0,1,2"});
  ASSERT_EQ(r.code, cli::kExitVerdict) << r.err;
  EXPECT_EQ(r.doc["schema"], cli::kSchema);
  EXPECT_EQ(r.doc["certificate"]["verdict"], "spectral");
  EXPECT_EQ(r.doc["certificate"]["witnesses"]["spectrum"], json::array({"0", "1/3", "2/3"}));
  for (const auto& p : r.doc["certificate"]["witnesses"]["orthogonality"]) EXPECT_EQ(p["cyclotomic_divisor"], 3);
}

TEST(Cli, SpectrumFindWeightedIsNotSpectral) {
  const auto r = run({"spectrum-find", "--atoms", "0,1", "--weights", "1/3,2/3"});
  ASSERT_EQ(r.code, cli::kExitVerdict) << r.err;
  EXPECT_EQ(r.doc["certificate"]["verdict"], "not_spectral");
}

TEST(Cli, SpectrumFindSelfSimilar) {
  const auto r = run({"spectrum-find", "--atoms", "0,2", "--scale", "4", "--depth", "3"});
  ASSERT_EQ(r.code, cli::kExitVerdict) << r.err;
  EXPECT_EQ(r.doc["certificate"]["witnesses"]["truncation"],
            json::array({"0", "1", "4", "5", "16", "17", "20", "21"}));
}

TEST(Cli, TileAnalyze) {
  const auto none = run({"tile-analyze", "--set", "0,3", "--n", "4"});
  ASSERT_EQ(none.code, cli::kExitVerdict) << none.err;
  EXPECT_EQ(none.doc["certificate"]["verdict"], "no_tiling");
  const auto tile = run({"tile-analyze", "--set", "0,2", "--n", "4"});
  EXPECT_EQ(tile.doc["certificate"]["verdict"], "spectral");
}

TEST(Cli, FrameBoundsWeighted) {
  const auto r = run({"frame-bounds", "--atoms", "0,1", "--weights", "1/3,2/3", "--freqs", "0,1/2", "--oracle"});
  ASSERT_EQ(r.code, cli::kExitVerdict) << r.err;
  const auto& b = r.doc["certificate"]["witnesses"]["bounds"];
  EXPECT_NEAR(b["lower"].get<double>(), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(b["upper"].get<double>(), 4.0 / 3.0, 1e-12);
  EXPECT_GE(r.doc["certificate"]["witnesses"]["oracle"]["min_ratio"].get<double>(), 2.0 / 3.0 - 1e-8);
}

TEST(Cli, FrameBoundsFromSystemFile) {
  const auto path = temp_file("system.json");
  {
    std::ofstream f(path);
    f << R"({"measure":{"type":"atomic","atoms":["0","1"]},"frequencies":["0","1/2"]})";
  }
  const auto r = run({"frame-bounds", "--system", path.string()});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, cli::kExitVerdict) << r.err;
  EXPECT_NEAR(r.doc["certificate"]["witnesses"]["bounds"]["lower"].get<double>(), 1.0, 1e-12);
}

TEST(Cli, JpScanWritesCsv) {
  const auto csv = temp_file("jp.csv");
  const auto r = run({"jp-scan", "--atoms", "0,1", "--freqs", "0,1/2", "--points", "16", "--csv", csv.string()});
  ASSERT_EQ(r.code, cli::kExitVerdict) << r.err;
  std::ifstream f(csv);
  std::string line;
  int rows = 0;
  while (std::getline(f, line)) ++rows;
  std::filesystem::remove(csv);
  EXPECT_EQ(rows, 17);
}

TEST(Cli, ConvolveBuildWeightedCantor) {
  const auto r = run({"convolve-build", "--eta", "0,1:1/3,2/3", "--nu", "selfsimilar", "0,1", "4", "--evidence-depths",
                      "1,2"});
  ASSERT_EQ(r.code, cli::kExitVerdict) << r.err;
  EXPECT_EQ(r.doc["certificate"]["verdict"], "riesz_evidence");
  const auto& certs = r.doc["result"]["certificates"];
  ASSERT_EQ(certs.size(), 2u);
  EXPECT_EQ(certs[0]["verdict"], "not_spectral");
}

TEST(Cli, ConvolveBuildIntervals) {
  const auto r = run({"convolve-build", "--intervals", "0:1/2,1:3/2"});
  ASSERT_EQ(r.code, cli::kExitVerdict) << r.err;
  EXPECT_EQ(r.doc["result"]["offsets"], json::array({0, 2}));
}

TEST(Cli, DensityScanIsInconclusive) {
  const auto r = run({"density-scan", "--lattice", "1", "--lo", "-100", "--hi", "100", "--h", "10"});
  ASSERT_EQ(r.code, cli::kExitInconclusive) << r.err;
  EXPECT_EQ(r.doc["certificate"]["verdict"], "inconclusive");
  EXPECT_NEAR(r.doc["certificate"]["witnesses"]["samples"][0]["density"].get<double>(), 1.0, 1e-12);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"spectrum-find"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"no-such-command"}).code, cli::kExitUsage);
  const auto bad = run({"spectrum-find", "--atoms", "0,1", "--weights", "1/2,1/3"});
  EXPECT_EQ(bad.code, cli::kExitUsage);
  EXPECT_NE(bad.err.find("error:"), std::string::npos);
}

TEST(Cli, ArgvRoundTripReproducesVerdict) {
  const std::vector<std::vector<std::string>> cases{
      {"spectrum-find", "--atoms", "0,1,5"},
      {"tile-analyze", "--set", "0,1,4,5", "--n", "8"},
      {"frame-bounds", "--atoms", "0,1,3", "--freqs", "0,1/4,1/2", "--oracle", "--seed", "9"},
      {"convolve-build", "--eta", "0,1", "--nu", "lebesgue", "--depth", "2"},
  };
  for (const auto& args : cases) {
    const auto first = run(args);
    ASSERT_NE(first.code, cli::kExitUsage) << first.err;
    const auto argv = first.doc["input"]["argv"].get<std::vector<std::string>>();
    EXPECT_EQ(argv, args);
    const auto second = run(argv);
    EXPECT_EQ(second.code, first.code);
    EXPECT_EQ(second.doc["certificate"]["verdict"], first.doc["certificate"]["verdict"]);
    EXPECT_EQ(second.doc["certificate"]["witnesses"], first.doc["certificate"]["witnesses"]);
  }
}

TEST(Cli, OutFlagWritesReport) {
  const auto path = temp_file("out.json");
  std::ostringstream out, err;
  const int code = cli::run({"spectrum-find", "--atoms", "0,1", "--out", path.string()}, out, err);
  EXPECT_EQ(code, cli::kExitVerdict);
  EXPECT_TRUE(out.str().empty());
  std::ifstream f(path);
  const auto doc = json::parse(f);
  std::filesystem::remove(path);
  EXPECT_EQ(doc["certificate"]["verdict"], "spectral");
}
