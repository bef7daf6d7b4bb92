#pragma once

#include <stdexcept>
#include <string>

namespace grothkit {

// Base for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class VariableSpaceMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeOfZero : public Error {
 public:
  DegreeOfZero() : Error("degree of the zero polynomial is undefined") {}
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class InvalidGrid : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class NotZeroOne : public Error {
 public:
  using Error::Error;
};

class FactorizationMismatch : public Error {
 public:
  using Error::Error;
};

// A polynomial property that must hold by construction did not hold.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace grothkit
