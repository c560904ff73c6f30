#pragma once

#include <stdexcept>
#include <string>

namespace spectra_forge {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An operation was called with arguments outside its contract.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// A malformed rational / list / JSON document.
class ParseError : public Error {
public:
  using Error::Error;
};

// An enumeration would exceed its configured size cap.
class SizeCapExceeded : public Error {
public:
  using Error::Error;
};

// A randomized search ran out of retries.
class RetryBudgetExceeded : public Error {
public:
  using Error::Error;
};

// A structural identity that must hold (by a known lemma) failed to hold.
class StructureError : public Error {
public:
  using Error::Error;
};

}  // namespace spectra_forge
