#pragma once

#include <stdexcept>
#include <string>

namespace phicert {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation
// (ln of a non-positive interval, division by an interval containing 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A result is not representable with finite endpoints.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A pipeline or prover parameter violates its precondition.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A value object (measure, family, table) fails its invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The start-up cross-check of the floating-point logarithm failed; no
// certificate may be issued on this platform.
class SelfCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace phicert
