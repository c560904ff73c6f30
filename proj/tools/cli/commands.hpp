#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spectra_forge/certificate.hpp"

namespace spectra_forge::cli {

struct TileOptions {
  std::string set;
  std::int64_t n = 0;
};

struct SpectrumOptions {
  std::string atoms;
  std::string weights;
  std::optional<std::int64_t> scale;
  int depth = 3;
  double tolerance = 1e-10;
};

struct FrameOptions {
  std::string atoms;
  std::string weights;
  std::string freqs;
  std::string system;
  bool oracle = false;
  int samples = 500;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
};

struct JpOptions {
  std::string atoms;
  std::string weights;
  std::string digits;
  std::optional<std::int64_t> scale;
  std::string freqs;
  std::optional<int> spectrum_depth;
  std::optional<int> approximate;
  int depth = 40;
  double tolerance = 1e-10;
  double grid_min = 0.0;
  double grid_max = 1.0;
  int points = 512;
  std::string csv;
};

struct ConvolveOptions {
  std::string eta;
  std::int64_t q = 1;
  std::vector<std::string> nu;
  std::string intervals;
  int depth = 3;
  std::string evidence_depths = "1,2,3,4";
  int atom_extra_depth = 2;
  std::uint64_t seed = 0;
};

struct DensityOptions {
  std::string freqs;
  std::string lattice;
  std::string digits;
  std::optional<std::int64_t> scale;
  int depth = 4;
  double lo = 0.0;
  double hi = 0.0;
  std::string h;
  std::string csv;
};

/// JSON body (without the schema/command/argv envelope), the primary
/// certificate and optional CSV text.
struct Report {
  nlohmann::json input = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  Certificate certificate;
  std::optional<std::string> csv_text;
  std::string csv_path;
};

Report tile_analyze(const TileOptions& o);
Report spectrum_find(const SpectrumOptions& o);
Report frame_bounds_command(const FrameOptions& o);
Report jp_scan_command(const JpOptions& o);
Report convolve_build(const ConvolveOptions& o);
Report density_scan(const DensityOptions& o);

}  // namespace spectra_forge::cli
