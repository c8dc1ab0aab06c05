#pragma once

#include <stdexcept>
#include <string>

namespace intfn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact integer arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (trace rows, config lines, rationals, step tokens).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The generator broke one of its own invariants.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace intfn
