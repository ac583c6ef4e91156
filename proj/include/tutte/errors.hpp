#pragma once

#include <stdexcept>
#include <string>

namespace tutte {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A size guard refused the computation.
class GuardError : public Error {
 public:
  using Error::Error;
};

// An internal mathematical invariant failed.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace tutte
