#pragma once

#include <stdexcept>
#include <string>

namespace wirsing {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the requested operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A certified decision could not be reached with the available precision.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Malformed or incomplete input data (sample sets, estimate maps, files).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A bounded search found fewer solutions than requested.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace wirsing
