#pragma once

#include <stdexcept>
#include <string>

namespace jacdiv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured size bound (degree, pair count, variable count) was exceeded.
/// Raised instead of returning a truncated or approximate answer.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold mathematically failed at runtime.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace jacdiv
