#pragma once

#include <stdexcept>
#include <string>

namespace tlcp {

// Base for all library errors. CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated an operation's precondition (bad shape, out-of-domain value).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Not enough data to satisfy an operation's contract (empty class, too few windows).
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

// Malformed input file; message carries line/column context.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A numeric routine failed to produce a usable result.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace tlcp
