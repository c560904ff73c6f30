#include "spectra_forge/measure_json.hpp"

#include "spectra_forge/errors.hpp"

namespace spectra_forge {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("measure document: missing field '") + key + "'");
  }
  return j.at(key);
}

std::string type_of(const json& j) {
  const json& t = field(j, "type");
  if (!t.is_string()) throw ParseError("measure document: 'type' must be a string");
  return t.get<std::string>();
}

std::int64_t integer_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("measure document: '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace

json rationals_to_json(const std::vector<Rational>& values) { return json(to_strings(values)); }

std::vector<Rational> rationals_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (item.is_string()) out.push_back(parse_rational(item.get<std::string>()));
    else if (item.is_number_integer()) out.emplace_back(item.get<std::int64_t>());
    else throw ParseError("rationals must be \"p/q\" strings or integers");
  }
  return out;
}

json to_json(const AtomicMeasure& m) {
  return {{"type", "atomic"}, {"atoms", rationals_to_json(m.atoms())}, {"weights", rationals_to_json(m.weights())}};
}

json to_json(const SelfSimilarMeasure& m) {
  return {{"type", "selfsimilar"}, {"digits", m.digits()}, {"scale", m.scale()}};
}

json to_json(const ContinuousFactor& m) {
  if (const auto* ss = std::get_if<SelfSimilarMeasure>(&m)) return to_json(*ss);
  return {{"type", "lebesgue"}};
}

json to_json(const ConvolutionMeasure& m) {
  return {{"type", "convolution"},
          {"discrete", to_json(m.discrete_factor())},
          {"q", m.dilation()},
          {"continuous", to_json(m.continuous_factor())}};
}

json to_json(const Measure& m) {
  return std::visit([](const auto& v) { return to_json(v); }, m);
}

AtomicMeasure atomic_from_json(const json& j) {
  if (type_of(j) != "atomic") throw ParseError("expected an atomic measure document");
  auto atoms = rationals_from_json(field(j, "atoms"));
  if (!j.contains("weights")) return AtomicMeasure::uniform(std::move(atoms));
  return AtomicMeasure(std::move(atoms), rationals_from_json(j.at("weights")));
}

SelfSimilarMeasure selfsimilar_from_json(const json& j) {
  if (type_of(j) != "selfsimilar") throw ParseError("expected a selfsimilar measure document");
  const json& d = field(j, "digits");
  if (!d.is_array()) throw ParseError("'digits' must be an array of integers");
  std::vector<std::int64_t> digits;
  for (const auto& x : d) {
    if (!x.is_number_integer()) throw ParseError("'digits' must be an array of integers");
    digits.push_back(x.get<std::int64_t>());
  }
  return SelfSimilarMeasure(std::move(digits), integer_field(j, "scale"));
}

ContinuousFactor continuous_from_json(const json& j) {
  const std::string t = type_of(j);
  if (t == "lebesgue") return UnitIntervalLebesgue{};
  if (t == "selfsimilar") return selfsimilar_from_json(j);
  throw ParseError("continuous factor must be 'lebesgue' or 'selfsimilar', got '" + t + "'");
}

ConvolutionMeasure convolution_from_json(const json& j) {
  if (type_of(j) != "convolution") throw ParseError("expected a convolution measure document");
  return ConvolutionMeasure(atomic_from_json(field(j, "discrete")), integer_field(j, "q"),
                            continuous_from_json(field(j, "continuous")));
}

Measure measure_from_json(const json& j) {
  const std::string t = type_of(j);
  if (t == "atomic") return atomic_from_json(j);
  if (t == "selfsimilar") return selfsimilar_from_json(j);
  if (t == "convolution") return convolution_from_json(j);
  throw ParseError("unknown measure type '" + t + "'");
}

}  // namespace spectra_forge
