#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minorforge {

/// Base of every error raised by the library. Each subclass maps to one CLI
/// exit code (see tools/minorforge.cpp).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (exit code 1).
class InputError : public Error {
public:
  using Error::Error;
};

/// Parameter combinations that cannot produce a construction.
class ParameterError : public InputError {
public:
  using InputError::InputError;
};

/// No path exists where one was requested.
class ConnectivityError : public InputError {
public:
  ConnectivityError(const std::string& what, std::size_t reachable)
      : InputError(what), reachable_(reachable) {}

  /// Number of vertices reachable from the source side.
  std::size_t reachable() const noexcept { return reachable_; }

private:
  std::size_t reachable_;
};

/// Request exceeds what the implementation can do exactly (exit code 2).
class CapabilityError : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed (exit code 3). Always a bug.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

}  // namespace minorforge
