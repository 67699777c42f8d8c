#pragma once

#include <stdexcept>
#include <string>

namespace liemarkov {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Out-of-range entry, wrong shape, or a table that is not associative
/// where associativity is required.
class MalformedTable : public Error {
 public:
  using Error::Error;
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

class NotAGroup : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// A mathematical guarantee failed at run time (e.g. a semigroup-derived
/// model that is not Lie-closed). The CLI maps this to exit code 2.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace liemarkov
