#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

// Malformed input: bad DIMACS, bad graph document, invariant violation.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A guard or precondition does not hold, so the operation declines to run.
struct Refusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rainbow
