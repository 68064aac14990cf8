#pragma once

#include <stdexcept>
#include <string>

namespace seclab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in prime field") {}
};

/// Integration hit an exponent e with e + 1 divisible by the characteristic.
class CharacteristicObstruction : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands live in different rings") {}
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configured degree / basis-size / matrix-size budget was exceeded.
class ResourceLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Randomized construction landed on a non-generic choice (e.g. a bad seed).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class CertificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace seclab
