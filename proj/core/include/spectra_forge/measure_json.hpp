#pragma once

#include <nlohmann/json.hpp>

#include "spectra_forge/measures.hpp"

namespace spectra_forge {

// Measure documents:
//   {"type":"atomic", "atoms":["0","1/2"], "weights":["1/3","2/3"]}
//   {"type":"selfsimilar", "digits":[0,2], "scale":4}
//   {"type":"lebesgue"}
//   {"type":"convolution", "discrete":{atomic}, "q":1, "continuous":{selfsimilar|lebesgue}}
// Rationals are always "p/q" strings so that a round trip is exact.

nlohmann::json to_json(const AtomicMeasure& m);
nlohmann::json to_json(const SelfSimilarMeasure& m);
nlohmann::json to_json(const ContinuousFactor& m);
nlohmann::json to_json(const ConvolutionMeasure& m);
nlohmann::json to_json(const Measure& m);

nlohmann::json rationals_to_json(const std::vector<Rational>& values);
/// Accepts "p/q" strings and JSON integers. Throws ParseError.
std::vector<Rational> rationals_from_json(const nlohmann::json& j);

AtomicMeasure atomic_from_json(const nlohmann::json& j);
SelfSimilarMeasure selfsimilar_from_json(const nlohmann::json& j);
ContinuousFactor continuous_from_json(const nlohmann::json& j);
ConvolutionMeasure convolution_from_json(const nlohmann::json& j);
/// Dispatches on "type"; throws ParseError for unknown or malformed documents.
Measure measure_from_json(const nlohmann::json& j);

}  // namespace spectra_forge
