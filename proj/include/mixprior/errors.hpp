#pragma once

#include <stdexcept>
#include <string>

namespace mixprior {

// Base class for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: malformed spec strings, out-of-range parameters, k > N, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The truncated sum over K cannot be formed or covers too little mass to be
// meaningful.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// Rejection sampling ran out of its draw budget before collecting enough
// accepted partitions.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace mixprior
