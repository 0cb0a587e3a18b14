#pragma once

#include <stdexcept>
#include <string>

namespace braidss {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed tree text or serialized artifact.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A precondition on an argument was violated (index out of range, alphabet
// mismatch, degree beyond a Hall set, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A mathematical invariant that must hold by theorem did not hold. Always
// indicates a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace braidss
