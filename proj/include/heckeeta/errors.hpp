#pragma once

#include <stdexcept>
#include <string>

namespace heckeeta {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// D is not a fundamental discriminant D = 1 mod 4, squarefree, D >= 5.
class InvalidDiscriminant : public Error {
 public:
  explicit InvalidDiscriminant(long long D)
      : Error("D = " + std::to_string(D) +
              " is not a fundamental discriminant (need D = 1 mod 4, squarefree, D >= 5)"),
        discriminant(D) {}
  long long discriminant;
};

/// Operands belong to different rings (different D or different lengths).
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// An exact invariant failed inside the library. Indicates a bug, not bad input.
class CorruptionError : public Error {
 public:
  using Error::Error;
};

/// A cyclotomic element could not be written as (a + b*sqrt(D))/2.
class NotInQuadraticField : public Error {
 public:
  using Error::Error;
};

/// A numerical evaluation was requested too close to the real axis.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

/// Requested order exceeds the configured memory guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace heckeeta
