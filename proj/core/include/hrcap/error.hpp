#pragma once

#include <stdexcept>
#include <string>

namespace hrcap {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text. `line` is 1-based, 0 when unknown.
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Structurally broken instance or matching (failed validation).
struct ValidationError : Error {
  using Error::Error;
};

// Caller violated an operation precondition (ties where strict lists are
// required, missing normalization, infeasible budget, bad parameters).
struct PreconditionError : Error {
  using Error::Error;
};

// A search was refused or aborted because it exceeds the configured guard.
struct GuardExceeded : Error {
  long long count;
  GuardExceeded(long long count_, long long guard)
      : Error("search space of " + std::to_string(count_) +
              " candidates exceeds guard " + std::to_string(guard)),
        count(count_) {}
};

}  // namespace hrcap
