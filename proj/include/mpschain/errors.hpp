#pragma once

#include <stdexcept>

namespace mpschain {

/// Base class for all library errors. ParseError marks malformed input
/// (CLI exit code 2); every other subclass is a computed failure (exit 1).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct ArgumentError : Error {
  using Error::Error;
};

struct RangeError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

struct ResourceError : Error {
  using Error::Error;
};

struct UnsupportedFormError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace mpschain
