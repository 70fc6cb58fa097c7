#pragma once

#include <stdexcept>

namespace sumsetlab {

// Base class for every error raised by the library. The CLI maps these to
// exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A group or table would exceed the configured element cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

// Precondition violation: out-of-range element, mismatched groups, bad
// parameter.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A rejection sampler ran out of attempts.
class BudgetExhaustedError : public Error {
 public:
  using Error::Error;
};

}  // namespace sumsetlab
