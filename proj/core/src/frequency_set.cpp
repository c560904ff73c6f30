#include "spectra_forge/frequency_set.hpp"

#include <algorithm>

#include "spectra_forge/errors.hpp"

namespace spectra_forge {

FrequencySet::FrequencySet(std::vector<Rational> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  const auto dup = std::adjacent_find(values_.begin(), values_.end());
  if (dup != values_.end()) throw PreconditionError("frequency set: duplicate value " + to_string(*dup));
}

FrequencySet::FrequencySet(std::initializer_list<Rational> values)
    : FrequencySet(std::vector<Rational>(values)) {}

bool FrequencySet::contains(const Rational& x) const {
  return std::binary_search(values_.begin(), values_.end(), x);
}

std::vector<double> FrequencySet::as_doubles() const {
  std::vector<double> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(to_double(v));
  return out;
}

FrequencySet direct_sum(const FrequencySet& a, const FrequencySet& b) {
  std::vector<Rational> sums;
  sums.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) sums.push_back(x + y);
  }
  std::sort(sums.begin(), sums.end());
  if (std::adjacent_find(sums.begin(), sums.end()) != sums.end()) {
    throw StructureError("direct_sum: the sum of the two frequency sets is not direct");
  }
  return FrequencySet(std::move(sums));
}

FrequencySet scaled(const FrequencySet& s, const Rational& factor) {
  if (factor == 0) throw PreconditionError("scaled: zero factor");
  std::vector<Rational> out;
  out.reserve(s.size());
  for (const auto& v : s) out.push_back(v * factor);
  return FrequencySet(std::move(out));
}

FrequencySet reduced_mod_one(const FrequencySet& s) {
  std::vector<Rational> out;
  out.reserve(s.size());
  for (const auto& v : s) out.push_back(frac_of(v));
  return FrequencySet(std::move(out));
}

}  // namespace spectra_forge
