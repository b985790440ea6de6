#pragma once

#include <stdexcept>
#include <string>

namespace sroabp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes or lengths do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on the arguments does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A size guard (enumeration cap, order cap) was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// Floating-point routine did not converge or failed verification.
class NumericError : public Error {
 public:
  using Error::Error;
};

class NonCommutingError : public Error {
 public:
  using Error::Error;
};

/// A matrix is not in the span of the ring's normal-set monomials.
class NotInRingError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON input or a value that cannot be decoded.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sroabp
