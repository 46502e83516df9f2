#pragma once

#include <stdexcept>
#include <string>

namespace parcat {

// Precondition or argument failure; the CLI maps it to a usage exit.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal structure violates an invariant it must satisfy.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace parcat
