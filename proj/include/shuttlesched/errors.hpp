#pragma once

#include <stdexcept>
#include <string>

namespace shuttle {

// Bad argument to a query or evaluation (t < 0, y outside [0, D(T)], ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Solver called on an instance outside its supported class.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The instance has no feasible solution (e.g. CS < D(T) without returns).
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed instance or schedule file.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration budget exceeded in a brute-force oracle.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace shuttle
