#pragma once

#include <stdexcept>
#include <string>

namespace spapt {

// Input that violates a documented precondition (dimension, range, validity).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedDimension : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotPositiveSemidefinite : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Iterative routine failed to converge or produced a non-finite result.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spapt
