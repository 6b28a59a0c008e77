#pragma once

#include <vector>

#include "pathlp/linalg.hpp"

namespace pathlp {

// An entry is treated as zero during elimination when its magnitude is at
// most kRankEps * max(1, ||A||_inf).
inline constexpr double kRankEps = 1e-10;

struct RowReduceResult {
  Matrix A;                 // kept original rows, columns permuted
  std::vector<double> b;    // matching right-hand sides
  std::vector<int> col_perm;  // col_perm[j] = input column at position j
  std::vector<int> dropped;   // input indices of dropped dependent rows
};

// Reduces A x = b to an equivalent full-row-rank system by Gaussian
// elimination with complete pivoting (row and column interchanges). Rows that
// eliminate to zero are dropped; the output keeps the original data of the
// surviving rows so exact (e.g. integer) input stays exact.
// Throws InfeasibleRowError when an eliminated row reads 0 = beta, beta != 0.
RowReduceResult row_reduce(const Matrix& a, const std::vector<double>& b);

}  // namespace pathlp
