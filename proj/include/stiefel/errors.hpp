#pragma once

#include <stdexcept>
#include <string>

namespace stiefel {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible shapes.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// (n, p) violates an operation's dimension constraints.
struct InvalidDims : Error {
  using Error::Error;
};

/// Closed-form block formulas are undefined at t = 0.
struct ZeroTime : Error {
  using Error::Error;
};

/// A raw random draw was too close to zero to normalize.
struct DegenerateDraw : Error {
  using Error::Error;
};

/// Attempt to normalize a zero tangent vector.
struct ZeroTangent : Error {
  using Error::Error;
};

/// Strict-mode logarithm refused an input with an eigenvalue within
/// tolerance of -1, where the principal log is set-valued.
struct NegativeEigenvalueAmbiguity : Error {
  using Error::Error;
};

}  // namespace stiefel
