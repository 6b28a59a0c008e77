#include "pathlp/model.hpp"

#include <cmath>
#include <stdexcept>

namespace pathlp {

void GeneralProblem::validate() const {
  if (objective.empty())
    throw std::invalid_argument("problem must have at least one variable");
  if (rows.empty())
    throw std::invalid_argument("problem must have at least one constraint row");
  for (double v : objective)
    if (!std::isfinite(v))
      throw std::invalid_argument("objective has a non-finite coefficient");
  const size_t v = objective.size();
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].coeffs.size() != v)
      throw std::invalid_argument("constraint row " + std::to_string(i) +
                                  " has " + std::to_string(rows[i].coeffs.size()) +
                                  " coefficients, expected " + std::to_string(v));
    for (double c : rows[i].coeffs)
      if (!std::isfinite(c))
        throw std::invalid_argument("constraint row " + std::to_string(i) +
                                    " has a non-finite coefficient");
    if (!std::isfinite(rows[i].rhs))
      throw std::invalid_argument("constraint row " + std::to_string(i) +
                                  " has a non-finite right-hand side");
  }
}

StandardProblem to_standard(const GeneralProblem& p) {
  p.validate();
  const int v = p.num_vars();
  const int n = static_cast<int>(p.rows.size());
  int extra = 0;
  for (const auto& row : p.rows)
    if (row.rel != Relation::Equal) ++extra;
  const int m = v + extra;

  StandardProblem sp;
  sp.A = Matrix(n, m);
  sp.b.resize(n);
  sp.c.assign(m, 0.0);
  sp.var_map.resize(m);
  sp.col_perm.resize(m);
  sp.num_original_vars = v;

  const double sign = p.sense == Sense::Maximize ? -1.0 : 1.0;
  for (int j = 0; j < v; ++j) {
    sp.c[j] = sign * p.objective[j];
    sp.var_map[j] = {ColumnOrigin::Kind::Original, j};
  }

  int next = v;
  for (int i = 0; i < n; ++i) {
    const auto& row = p.rows[i];
    for (int j = 0; j < v; ++j) sp.A(i, j) = row.coeffs[j];
    sp.b[i] = row.rhs;
    if (row.rel == Relation::LessEqual) {
      sp.A(i, next) = 1.0;
      sp.var_map[next] = {ColumnOrigin::Kind::Slack, i};
      ++next;
    } else if (row.rel == Relation::GreaterEqual) {
      sp.A(i, next) = -1.0;
      sp.var_map[next] = {ColumnOrigin::Kind::Surplus, i};
      ++next;
    }
  }
  for (int j = 0; j < m; ++j) sp.col_perm[j] = j;
  return sp;
}

std::vector<double> recover_solution(const StandardProblem& sp,
                                     const std::vector<double>& x_std) {
  if (static_cast<int>(x_std.size()) != sp.A.cols())
    throw std::invalid_argument("recover_solution: expected " +
                                std::to_string(sp.A.cols()) + " values, got " +
                                std::to_string(x_std.size()));
  for (double v : x_std)
    if (!std::isfinite(v))
      throw std::invalid_argument("recover_solution: non-finite input");
  std::vector<double> out(sp.num_original_vars, 0.0);
  for (size_t j = 0; j < x_std.size(); ++j) {
    const auto& origin = sp.var_map[sp.col_perm[j]];
    if (origin.kind == ColumnOrigin::Kind::Original) out[origin.index] = x_std[j];
  }
  return out;
}

}  // namespace pathlp
