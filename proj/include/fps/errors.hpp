#pragma once

#include <stdexcept>
#include <string>

namespace fps {

/// Base of every operational failure raised by the library. Negative
/// mathematical answers (no solution, not symmetric, not conjugate) are
/// returned as values, never thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A root of unity of the requested order is not in the configured field.
class ConductorTooSmall : public Error {
 public:
  ConductorTooSmall(int order, int conductor)
      : Error("roots of unity of order " + std::to_string(order) +
              " are not in the cyclotomic field of conductor " +
              std::to_string(conductor)),
        order_(order),
        conductor_(conductor) {}
  int order() const { return order_; }
  int conductor() const { return conductor_; }

 private:
  int order_;
  int conductor_;
};

/// The requested n-th root has no representative in the configured field.
class RootNotRepresentable : public Error {
 public:
  using Error::Error;
};

class ZeroInput : public Error {
 public:
  using Error::Error;
};

/// A ∘ B with ord B = 0.
class CompositionUndefined : public Error {
 public:
  using Error::Error;
};

/// Orders of the inputs do not satisfy the divisibility precondition.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class NotADoubleDecomposition : public Error {
 public:
  using Error::Error;
};

/// A symmetric-decomposition precondition (A = z^r R(z^m)) does not hold.
class NotSymmetric : public Error {
 public:
  using Error::Error;
};

/// Approximate backend could not decide a predicate at the configured tolerance.
class ToleranceAmbiguous : public Error {
 public:
  using Error::Error;
};

/// Elements from different fields (conductors) were combined.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Input violates a documented precondition (wrong order, wrong shape).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A verification the theory guarantees failed; indicates a truncation window
/// too small for the input or a tolerance failure in the approximate backend.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fps
