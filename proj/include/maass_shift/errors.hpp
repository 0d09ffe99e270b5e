#pragma once

#include <stdexcept>
#include <string>

namespace maass_shift {

// Base for every numeric failure raised by the library. Out-of-range indexing
// uses std::out_of_range and bad configuration uses std::invalid_argument.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

// Quadrature stalled, an extrapolation tableau failed to contract, or two
// summation schemes disagreed.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// A truncated expansion's tail estimate exceeds the requested tolerance.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class IllConditionedError : public Error {
 public:
  using Error::Error;
};

}  // namespace maass_shift
