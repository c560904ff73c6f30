#pragma once

#include <cstddef>
#include <vector>

#include "spectra_forge/rational.hpp"

namespace spectra_forge {

/// Finite set of exact rational frequencies, kept sorted ascending.
class FrequencySet {
public:
  FrequencySet() = default;
  /// Sorts the values; throws PreconditionError on duplicates.
  explicit FrequencySet(std::vector<Rational> values);
  FrequencySet(std::initializer_list<Rational> values);

  const std::vector<Rational>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  bool contains(const Rational& x) const;
  std::vector<double> as_doubles() const;

  friend bool operator==(const FrequencySet&, const FrequencySet&) = default;

private:
  std::vector<Rational> values_;
};

/// {a + b}; throws StructureError when two sums coincide (the sum is not direct).
FrequencySet direct_sum(const FrequencySet& a, const FrequencySet& b);

/// {factor * x}
FrequencySet scaled(const FrequencySet& s, const Rational& factor);

/// Every element replaced by its fractional part; duplicates are an error.
FrequencySet reduced_mod_one(const FrequencySet& s);

}  // namespace spectra_forge
