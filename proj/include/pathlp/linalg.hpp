#pragma once

#include <cstddef>
#include <vector>

namespace pathlp {

// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  // A * v
  std::vector<double> mul(const std::vector<double>& v) const;
  // A^T * v
  std::vector<double> tmul(const std::vector<double>& v) const;

  double max_abs() const;
  // Matrix infinity norm (max absolute row sum).
  double inf_norm() const;

  bool all_finite() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// Vector helpers shared across the solver.
double dot(const std::vector<double>& a, const std::vector<double>& b);
double inf_norm(const std::vector<double>& v);

// Pivot acceptance threshold for the symmetric factorization: a pivot is
// rejected when it falls below kCholEps times the largest diagonal entry.
inline constexpr double kCholEps = 1e-13;

// Lower-triangular Cholesky factor with the pivot diagnostics needed to
// report near-singularity instead of producing garbage.
class Cholesky {
 public:
  // Attempts to factor M = L L^T. Never throws; check ok().
  static Cholesky factor(const Matrix& m, double pivot_eps = kCholEps);

  bool ok() const { return ok_; }
  double min_pivot() const { return min_pivot_; }
  double max_diag() const { return max_diag_; }

  // Solves L L^T x = rhs. Requires ok().
  std::vector<double> solve(const std::vector<double>& rhs) const;

 private:
  Matrix lower_;
  bool ok_ = false;
  double min_pivot_ = 0.0;
  double max_diag_ = 0.0;
};

// A * diag(x_i / s_i) * A^T for strictly positive x, s.
// Throws NonPositiveScalingError when a scaling entry is not positive.
Matrix normal_matrix(const Matrix& a, const std::vector<double>& x,
                     const std::vector<double>& s);

// Solves an SPD system by factor-and-solve with one refinement pass.
// Throws IllConditionedError when a factorization pivot is rejected,
// std::invalid_argument on shape or symmetry violations.
std::vector<double> spd_solve(const Matrix& m, const std::vector<double>& rhs);

// True iff A A^T admits a full Cholesky factorization, i.e. the rows of A
// are linearly independent to working precision. Returns false rather than
// throwing, including for the impossible case rows > cols.
bool full_row_rank_check(const Matrix& a);

}  // namespace pathlp
