#pragma once

#include <stdexcept>
#include <string>

namespace laplace_prolate {

// Argument outside the mathematical domain of an operation (c <= 0, alpha <= -1, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Result not representable (overflow of an analytic extension, etc.).
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// Internal numerical failure: non-convergence, broken invariant of a solve.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The Jacobi truncation was too small for the requested eigenpairs.
class TruncationError : public NumericError {
 public:
  using NumericError::NumericError;
};

// Division by an eigenvalue too small to be meaningful, or a ratio lost to cancellation.
class ConditioningError : public NumericError {
 public:
  using NumericError::NumericError;
};

// A user-supplied function returned a non-finite value at a quadrature node.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed, truncated, or version-mismatched spectrum cache file.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace laplace_prolate
