#pragma once

#include <stdexcept>
#include <string>

namespace trapezoids {

/// An input violates an operation's precondition (zero-length interval,
/// duplicate pair, vanishing denominator, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact and approximate scalars were combined.
class ModeMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Reading or writing a file failed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace trapezoids
