#pragma once

#include <stdexcept>
#include <string>

namespace tpos {

/// Index outside the matrix or generator range.
struct BoundsError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Exact inversion or solve hit a zero pivot.
struct SingularMatrixError : std::domain_error {
  using std::domain_error::domain_error;
};

/// An operation was called outside its documented domain.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A postcondition that the mathematics guarantees did not hold.
/// Seeing this means the implementation is wrong, not the input.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Floating fallback could not meet its residual or separation bound.
struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed text input (matrix files, CLI ranges).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace tpos
