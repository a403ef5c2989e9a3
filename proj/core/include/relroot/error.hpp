#pragma once

#include <stdexcept>
#include <string>

namespace relroot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unparsable type names, invalid ranks, bad folding specs.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Polynomials built over different variable registries were combined.
class RegistryMismatch : public Error {
 public:
  using Error::Error;
};

/// A finite group enumeration would exceed the configured element cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed. Always indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace relroot
