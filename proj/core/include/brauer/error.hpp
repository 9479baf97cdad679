#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data: bad pairings, unparsable words or coefficients.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Composition or tensor operands whose node counts do not line up.
class ValencyError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

// Operands living over different coefficient rings or with different delta.
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

// A computation would exceed the configured cell budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace brauer
