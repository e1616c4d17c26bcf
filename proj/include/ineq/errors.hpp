#pragma once

#include <stdexcept>
#include <string>

namespace ineq {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (zero passed to a
/// family that divides, x >= 1 for K(x), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A malformed or inconsistent parameter: bad weights, p <= 1, an unparsable
/// spec token.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An iteration or adaptive scheme hit its hard cap without meeting tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Root bracketing found no sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// Normalizing quantities vanished (all-zero vector, empty support).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Input violates a stated precondition (length mismatch, time-likeness,
/// sign of a derivative).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ineq
