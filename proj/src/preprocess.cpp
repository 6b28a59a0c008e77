#include "pathlp/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pathlp/errors.hpp"

namespace pathlp {

RowReduceResult row_reduce(const Matrix& a, const std::vector<double>& b) {
  const int n = a.rows();
  const int m = a.cols();
  if (n < 1 || m < 1) throw std::invalid_argument("row_reduce: empty system");
  if (static_cast<int>(b.size()) != n)
    throw std::invalid_argument("row_reduce: rhs length mismatch");

  Matrix work = a;
  std::vector<double> rhs = b;
  std::vector<int> row_order(n), col_perm(m);
  std::iota(row_order.begin(), row_order.end(), 0);
  std::iota(col_perm.begin(), col_perm.end(), 0);

  const double tol = kRankEps * std::max(1.0, a.inf_norm());
  double b_scale = 1.0;
  for (double v : b) b_scale = std::max(b_scale, std::abs(v));
  const double rhs_tol = kRankEps * std::max(b_scale, std::max(1.0, a.inf_norm()));

  int rank = 0;
  for (int r = 0; r < std::min(n, m); ++r) {
    // Largest-magnitude entry in the trailing block; ties go to the earliest
    // row then column, which keeps the reduction deterministic.
    int pi = r, pj = r;
    double best = 0.0;
    for (int i = r; i < n; ++i)
      for (int j = r; j < m; ++j)
        if (std::abs(work(i, j)) > best) {
          best = std::abs(work(i, j));
          pi = i;
          pj = j;
        }
    if (best <= tol) break;

    if (pi != r) {
      for (int j = 0; j < m; ++j) std::swap(work(r, j), work(pi, j));
      std::swap(rhs[r], rhs[pi]);
      std::swap(row_order[r], row_order[pi]);
    }
    if (pj != r) {
      for (int i = 0; i < n; ++i) std::swap(work(i, r), work(i, pj));
      std::swap(col_perm[r], col_perm[pj]);
    }
    for (int i = r + 1; i < n; ++i) {
      const double factor = work(i, r) / work(r, r);
      if (factor == 0.0) continue;
      work(i, r) = 0.0;
      for (int j = r + 1; j < m; ++j) work(i, j) -= factor * work(r, j);
      rhs[i] -= factor * rhs[r];
    }
    rank = r + 1;
  }

  // Everything below the pivot block is numerically zero; a nonzero
  // right-hand side there means the system is inconsistent.
  for (int i = rank; i < n; ++i)
    if (std::abs(rhs[i]) > rhs_tol)
      throw InfeasibleRowError(row_order[i], rhs[i]);

  std::vector<int> kept(row_order.begin(), row_order.begin() + rank);
  std::sort(kept.begin(), kept.end());
  RowReduceResult out;
  out.col_perm = col_perm;
  out.dropped.assign(row_order.begin() + rank, row_order.end());
  std::sort(out.dropped.begin(), out.dropped.end());

  out.A = Matrix(rank, m);
  out.b.resize(rank);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < m; ++j) out.A(i, j) = a(kept[i], col_perm[j]);
    out.b[i] = b[kept[i]];
  }
  return out;
}

}  // namespace pathlp
