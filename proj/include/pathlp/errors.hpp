#pragma once

#include <stdexcept>
#include <string>

namespace pathlp {

// Base class for every domain error the solver raises. Contract violations
// (wrong vector lengths, invalid flags) use std::invalid_argument instead.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An eliminated constraint row reduced to 0 = beta with beta != 0.
class InfeasibleRowError : public SolverError {
 public:
  InfeasibleRowError(int row, double residual)
      : SolverError("constraint row " + std::to_string(row) +
                    " is inconsistent with the others (0 = " +
                    std::to_string(residual) + ")"),
        row_(row),
        residual_(residual) {}
  int row() const { return row_; }
  double residual() const { return residual_; }

 private:
  int row_;
  double residual_;
};

// A scaling vector that must be strictly positive has a non-positive entry.
class NonPositiveScalingError : public SolverError {
 public:
  using SolverError::SolverError;
};

// A symmetric factorization pivot fell below the acceptance threshold.
class IllConditionedError : public SolverError {
 public:
  using SolverError::SolverError;
};

class NonPositiveMuError : public SolverError {
 public:
  using SolverError::SolverError;
};

// An accepted iterate would break strict positivity or the centrality bound.
class InvariantViolationError : public SolverError {
 public:
  using SolverError::SolverError;
};

// Starting barrier parameter too small for a valid interior start.
class BadMuError : public SolverError {
 public:
  using SolverError::SolverError;
};

// A magnitude bound does not fit the floating-point range.
class BoundOverflowError : public SolverError {
 public:
  using SolverError::SolverError;
};

// Instance exceeds the enumeration guard of the brute-force oracle.
class TooLargeError : public SolverError {
 public:
  using SolverError::SolverError;
};

class ParseError : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace pathlp
