#pragma once

#include <stdexcept>
#include <string>

namespace altseq {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument or malformed input (not a permutation, n = 0, bad CSV...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An exhaustive oracle was asked to handle an input above its size guard.
class OracleTooLarge : public Error {
 public:
  using Error::Error;
};

// A computation was asked to exceed a configured resource limit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// Linear system without a unique solution.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

}  // namespace altseq
