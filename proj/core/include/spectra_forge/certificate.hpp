#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace spectra_forge {

enum class Verdict { spectral, riesz_evidence, frame, not_spectral, no_tiling, inconclusive };

std::string_view to_string(Verdict v);
/// Throws ParseError on an unknown name.
Verdict verdict_from_string(std::string_view name);

/// Truncation depth, tolerance and seed that produced a result.
struct PolicyEcho {
  std::optional<int> depth;
  std::optional<double> tolerance;
  std::optional<std::uint64_t> seed;
};

struct Certificate {
  Verdict verdict = Verdict::inconclusive;
  nlohmann::json witnesses = nlohmann::json::object();
  // which check produced the verdict
  std::string provenance;
  PolicyEcho policy;
  std::string reason;

  /// Throws StructureError unless there is at least one witness and, for an
  /// inconclusive verdict, a reason.
  void validate() const;
};

nlohmann::json to_json(const PolicyEcho& p);
nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace spectra_forge
