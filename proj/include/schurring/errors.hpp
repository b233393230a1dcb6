#pragma once

#include <stdexcept>
#include <string>

namespace schurring {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request exceeds a configured cap (field size, census size, oracle size, GL order).
class SizingError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad literal, bad partition file, inconsistent arguments.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A verification that must hold did not (cross-validation inconsistency, non-Schur basis).
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace schurring
