#pragma once

#include <stdexcept>
#include <string>

namespace cyclift {

// Malformed input text or JSON.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition does not hold (range, size mismatch, graph
// property).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed its configured budget.
class BudgetExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace cyclift
