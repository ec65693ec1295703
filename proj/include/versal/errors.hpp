#pragma once

#include <stdexcept>
#include <string>

namespace versal {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter, literal or descriptor violates a documented precondition.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// Operands live in different fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// The cubic (or char-2 model) would have a singular point.
class SingularCurve : public InvalidParams {
 public:
  using InvalidParams::InvalidParams;
};

/// A point does not satisfy the equation of the curve it was used with.
class OffCurve : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration was requested over a field that is too large (or infinite).
class FieldTooLarge : public Error {
 public:
  using Error::Error;
};

/// A halving routine was called on a curve whose 2-torsion shape it does not handle.
class WrongCase : public Error {
 public:
  using Error::Error;
};

class NotHalvable : public Error {
 public:
  using Error::Error;
};

/// The (r,T) criterion needs x0 != alpha.
class PointIsW3 : public Error {
 public:
  using Error::Error;
};

/// half_to_roots needs a half with nonzero y.
class TwoTorsionHalf : public Error {
 public:
  using Error::Error;
};

/// An internal re-check failed (a witness or a half did not verify).
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace versal
