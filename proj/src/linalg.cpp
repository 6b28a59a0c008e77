#include "pathlp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pathlp/errors.hpp"

namespace pathlp {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> Matrix::mul(const std::vector<double>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("Matrix::mul: vector length mismatch");
  std::vector<double> out(rows_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    double acc = 0.0;
    for (int j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

std::vector<double> Matrix::tmul(const std::vector<double>& v) const {
  if (static_cast<int>(v.size()) != rows_)
    throw std::invalid_argument("Matrix::tmul: vector length mismatch");
  std::vector<double> out(cols_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    const double vi = v[i];
    for (int j = 0; j < cols_; ++j) out[j] += (*this)(i, j) * vi;
  }
  return out;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::inf_norm() const {
  double norm = 0.0;
  for (int i = 0; i < rows_; ++i) {
    double row = 0.0;
    for (int j = 0; j < cols_; ++j) row += std::abs((*this)(i, j));
    norm = std::max(norm, row);
  }
  return norm;
}

bool Matrix::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  double acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

Cholesky Cholesky::factor(const Matrix& m, double pivot_eps) {
  Cholesky f;
  const int n = m.rows();
  f.lower_ = Matrix(n, n);
  for (int i = 0; i < n; ++i) f.max_diag_ = std::max(f.max_diag_, m(i, i));
  if (n == 0) {
    f.ok_ = true;
    return f;
  }
  if (!(f.max_diag_ > 0.0)) return f;  // not positive definite

  const double threshold = pivot_eps * f.max_diag_;
  f.min_pivot_ = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    double d = m(j, j);
    for (int k = 0; k < j; ++k) d -= f.lower_(j, k) * f.lower_(j, k);
    f.min_pivot_ = std::min(f.min_pivot_, d);
    if (!(d > threshold)) return f;  // rejected pivot, also catches NaN
    const double ljj = std::sqrt(d);
    f.lower_(j, j) = ljj;
    for (int i = j + 1; i < n; ++i) {
      double v = m(i, j);
      for (int k = 0; k < j; ++k) v -= f.lower_(i, k) * f.lower_(j, k);
      f.lower_(i, j) = v / ljj;
    }
  }
  f.ok_ = true;
  return f;
}

std::vector<double> Cholesky::solve(const std::vector<double>& rhs) const {
  if (!ok_) throw std::logic_error("Cholesky::solve called on failed factorization");
  const int n = lower_.rows();
  if (static_cast<int>(rhs.size()) != n)
    throw std::invalid_argument("Cholesky::solve: rhs length mismatch");
  std::vector<double> y(n);
  for (int i = 0; i < n; ++i) {
    double acc = rhs[i];
    for (int k = 0; k < i; ++k) acc -= lower_(i, k) * y[k];
    y[i] = acc / lower_(i, i);
  }
  std::vector<double> x(n);
  for (int i = n - 1; i >= 0; --i) {
    double acc = y[i];
    for (int k = i + 1; k < n; ++k) acc -= lower_(k, i) * x[k];
    x[i] = acc / lower_(i, i);
  }
  return x;
}

Matrix normal_matrix(const Matrix& a, const std::vector<double>& x,
                     const std::vector<double>& s) {
  const int n = a.rows();
  const int m = a.cols();
  if (static_cast<int>(x.size()) != m || static_cast<int>(s.size()) != m)
    throw std::invalid_argument("normal_matrix: scaling vector length mismatch");
  std::vector<double> d(m);
  for (int j = 0; j < m; ++j) {
    if (!(x[j] > 0.0) || !(s[j] > 0.0))
      throw NonPositiveScalingError("normal_matrix: scaling entries must be strictly positive");
    d[j] = x[j] / s[j];
  }
  Matrix out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double acc = 0.0;
      for (int k = 0; k < m; ++k) acc += a(i, k) * d[k] * a(j, k);
      out(i, j) = acc;
      out(j, i) = acc;
    }
  }
  return out;
}

std::vector<double> spd_solve(const Matrix& m, const std::vector<double>& rhs) {
  const int n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("spd_solve: matrix must be square");
  if (static_cast<int>(rhs.size()) != n)
    throw std::invalid_argument("spd_solve: rhs length mismatch");
  const double asym_tol = 1e-12 * std::max(1.0, m.max_abs());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (std::abs(m(i, j) - m(j, i)) > asym_tol)
        throw std::invalid_argument("spd_solve: matrix is not symmetric");

  auto f = Cholesky::factor(m);
  if (!f.ok())
    throw IllConditionedError("spd_solve: factorization pivot below threshold");
  auto x = f.solve(rhs);
  // One refinement pass keeps the residual near working precision even when
  // the system is poorly scaled.
  std::vector<double> r(n);
  auto mx = m.mul(x);
  for (int i = 0; i < n; ++i) r[i] = rhs[i] - mx[i];
  auto dx = f.solve(r);
  for (int i = 0; i < n; ++i) x[i] += dx[i];
  return x;
}

bool full_row_rank_check(const Matrix& a) {
  if (a.rows() > a.cols()) return false;
  const int n = a.rows();
  Matrix gram(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double acc = 0.0;
      for (int k = 0; k < a.cols(); ++k) acc += a(i, k) * a(j, k);
      gram(i, j) = acc;
      gram(j, i) = acc;
    }
  }
  return Cholesky::factor(gram).ok();
}

}  // namespace pathlp
