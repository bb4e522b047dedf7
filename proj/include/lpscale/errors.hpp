#ifndef LPSCALE_ERRORS_HPP
#define LPSCALE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lpscale {

/// Base class for everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands disagree in variable count or matrix shape.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input violates a structural precondition (zero vector, bad cosets,
/// asymmetric "Hermitian" polynomial, malformed file, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition failed: negativity, missing factor,
/// degenerate root structure, filter not lowpass, and so on.
class MathError : public Error {
 public:
  using Error::Error;
};

/// Positivity could not be decided at the requested resolution.
class InconclusiveError : public MathError {
 public:
  using MathError::MathError;
};

}  // namespace lpscale

#endif  // LPSCALE_ERRORS_HPP
