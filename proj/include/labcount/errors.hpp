#pragma once

#include <stdexcept>
#include <string>

namespace labcount {

// Caller passed arguments that violate an operation's contract (CLI exit 2).
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed input data, e.g. a bad graph file (CLI exit 3).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A resource guardrail refused the computation; pass force=true to override
// (CLI exit 4, or a warning record when --force is given).
struct guardrail_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace labcount
