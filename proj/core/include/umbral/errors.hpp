#pragma once

#include <stdexcept>
#include <string>

namespace umbral {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A floating-point product left the representable range; use the log-space path.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A delta operator violates sum(a_n) == 0 or sum(n a_n) == N.
class InvalidDelta : public Error {
 public:
  using Error::Error;
};

/// A sampled function does not cover enough lattice points for the stencil.
class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

/// The tan-pole level n = M/2 of the right/left infinite well.
class NonPhysicalState : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed (e.g. a real trig value kept an imaginary part).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace umbral
