#pragma once

#include <stdexcept>
#include <string>

namespace trigroots {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed an argument outside the documented range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// The input polynomial (or sample) is degenerate for the requested
// quantity: zero leading coefficient, a_0 = 0 for h(p), empty samples, ...
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// A root sits on the integration path.
class SingularInputError : public Error {
 public:
  using Error::Error;
};

// Malformed files and failed reads/writes.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace trigroots
