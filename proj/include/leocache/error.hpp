#pragma once

#include <stdexcept>
#include <string>

namespace leocache {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A deadline or segmentation left no usable slots.
class InfeasibleDeadline : public Error {
 public:
  explicit InfeasibleDeadline(const std::string& detail)
      : Error("infeasible deadline: " + detail) {}
};

// Invalid input to a numerical routine, or a routine that failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Hard violation of a configuration invariant.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace leocache
