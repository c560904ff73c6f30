#include "spectra_forge/certificate.hpp"

#include <array>
#include <utility>

#include "spectra_forge/errors.hpp"

namespace spectra_forge {

namespace {

constexpr std::array<std::pair<Verdict, std::string_view>, 6> kNames{{
    {Verdict::spectral, "spectral"},
    {Verdict::riesz_evidence, "riesz_evidence"},
    {Verdict::frame, "frame"},
    {Verdict::not_spectral, "not_spectral"},
    {Verdict::no_tiling, "no_tiling"},
    {Verdict::inconclusive, "inconclusive"},
}};

}  // namespace

std::string_view to_string(Verdict v) {
  for (const auto& [verdict, name] : kNames) {
    if (verdict == v) return name;
  }
  return "inconclusive";
}

Verdict verdict_from_string(std::string_view name) {
  for (const auto& [verdict, n] : kNames) {
    if (n == name) return verdict;
  }
  throw ParseError("unknown verdict '" + std::string(name) + "'");
}

void Certificate::validate() const {
  if (!witnesses.is_object() || witnesses.empty()) {
    throw StructureError("certificate '" + std::string(to_string(verdict)) + "' carries no witness");
  }
  if (verdict == Verdict::inconclusive && reason.empty()) {
    throw StructureError("inconclusive certificate without a reason");
  }
}

nlohmann::json to_json(const PolicyEcho& p) {
  nlohmann::json j = nlohmann::json::object();
  if (p.depth) j["depth"] = *p.depth;
  if (p.tolerance) j["tolerance"] = *p.tolerance;
  if (p.seed) j["seed"] = *p.seed;
  return j;
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j;
  j["verdict"] = std::string(to_string(c.verdict));
  j["witnesses"] = c.witnesses;
  j["provenance"] = c.provenance;
  j["policy"] = to_json(c.policy);
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("verdict") || !j["verdict"].is_string()) {
    throw ParseError("certificate document: missing verdict");
  }
  Certificate c;
  c.verdict = verdict_from_string(j["verdict"].get<std::string>());
  c.witnesses = j.value("witnesses", nlohmann::json::object());
  if (!c.witnesses.is_object()) throw ParseError("certificate document: witnesses must be an object");
  c.provenance = j.value("provenance", std::string{});
  c.reason = j.value("reason", std::string{});
  if (j.contains("policy")) {
    const auto& p = j["policy"];
    if (p.contains("depth")) c.policy.depth = p["depth"].get<int>();
    if (p.contains("tolerance")) c.policy.tolerance = p["tolerance"].get<double>();
    if (p.contains("seed")) c.policy.seed = p["seed"].get<std::uint64_t>();
  }
  return c;
}

}  // namespace spectra_forge
