#include "pathlp/central.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pathlp/errors.hpp"

namespace pathlp {

const char* to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::BigMInsufficientOrInfeasible: return "big_m_insufficient_or_infeasible";
    case Status::IllConditioned: return "ill_conditioned";
    case Status::IterationLimit: return "iteration_limit";
  }
  return "unknown";
}

double centrality(const std::vector<double>& x, const std::vector<double>& s,
                  double mu) {
  if (!(mu > 0.0)) throw NonPositiveMuError("centrality requires mu > 0");
  if (x.size() != s.size())
    throw std::invalid_argument("centrality: length mismatch");
  double acc = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double t = x[i] * s[i] / mu - 1.0;
    acc += t * t;
  }
  return std::sqrt(acc);
}

double mu_shrink_factor(int m) {
  if (m < 1) throw std::invalid_argument("mu_shrink_factor requires m >= 1");
  return 1.0 / (4.0 * std::sqrt(static_cast<double>(m)));
}

namespace {

void check_iterate_shapes(const StandardProblem& sp, const Iterate& it) {
  const int n = sp.A.rows();
  const int m = sp.A.cols();
  if (static_cast<int>(it.x.size()) != m || static_cast<int>(it.s.size()) != m ||
      static_cast<int>(it.y.size()) != n)
    throw std::invalid_argument("iterate dimensions do not match the problem");
}

void check_interior(const Iterate& it) {
  for (double v : it.x)
    if (!(v > 0.0)) throw InvariantViolationError("primal iterate lost strict positivity");
  for (double v : it.s)
    if (!(v > 0.0)) throw InvariantViolationError("dual slack lost strict positivity");
}

TraceRecord make_record(const StandardProblem& sp, const Iterate& it,
                        std::int64_t iter) {
  TraceRecord rec;
  rec.iter = iter;
  rec.mu = it.mu;
  rec.sigma = it.sigma;
  rec.primal_obj = dot(sp.c, it.x);
  rec.dual_obj = dot(sp.b, it.y);
  rec.gap = dot(it.x, it.s);
  auto ax = sp.A.mul(it.x);
  double pres = 0.0;
  for (size_t i = 0; i < ax.size(); ++i) pres = std::max(pres, std::abs(ax[i] - sp.b[i]));
  rec.primal_res = pres;
  auto aty = sp.A.tmul(it.y);
  double dres = 0.0;
  for (size_t j = 0; j < aty.size(); ++j)
    dres = std::max(dres, std::abs(aty[j] + it.s[j] - sp.c[j]));
  rec.dual_res = dres;
  return rec;
}

void fill_final(SolveReport& rep, const StandardProblem& sp, const Iterate& it) {
  rep.x = it.x;
  rep.y = it.y;
  rep.s = it.s;
  rep.primal_obj = dot(sp.c, it.x);
  rep.dual_obj = dot(sp.b, it.y);
  rep.gap = dot(it.x, it.s);
}

}  // namespace

NewtonStep newton_step(const StandardProblem& sp, const Iterate& it,
                       double mu_target) {
  check_iterate_shapes(sp, it);
  if (!(mu_target > 0.0)) throw NonPositiveMuError("newton_step requires mu > 0");
  const int m = sp.A.cols();

  // Right-hand side b - mu A S^-1 e of the normal equations.
  std::vector<double> sinv(m);
  for (int j = 0; j < m; ++j) {
    if (!(it.s[j] > 0.0) || !(it.x[j] > 0.0))
      throw NonPositiveScalingError("newton_step requires a strictly interior iterate");
    sinv[j] = 1.0 / it.s[j];
  }
  auto a_sinv = sp.A.mul(sinv);
  std::vector<double> rhs(sp.b.size());
  for (size_t i = 0; i < rhs.size(); ++i) rhs[i] = sp.b[i] - mu_target * a_sinv[i];

  NewtonStep step;
  step.dy = spd_solve(normal_matrix(sp.A, it.x, it.s), rhs);
  auto at_dy = sp.A.tmul(step.dy);
  step.ds.resize(m);
  for (int j = 0; j < m; ++j) step.ds[j] = -at_dy[j];
  step.dx.resize(m);
  for (int j = 0; j < m; ++j)
    step.dx[j] = -(it.x[j] / it.s[j]) * step.ds[j] + mu_target / it.s[j] - it.x[j];
  return step;
}

std::pair<Iterate, NewtonStep> advance_with_step(const StandardProblem& sp,
                                                 const Iterate& it) {
  check_iterate_shapes(sp, it);
  check_interior(it);
  if (it.sigma > kSigmaMax + kSigmaSlack)
    throw InvariantViolationError("starting centrality exceeds the ceiling");

  auto step = newton_step(sp, it, it.mu);
  Iterate next;
  const int m = sp.A.cols();
  const int n = sp.A.rows();
  next.x.resize(m);
  next.s.resize(m);
  next.y.resize(n);
  for (int j = 0; j < m; ++j) {
    next.x[j] = it.x[j] + step.dx[j];
    next.s[j] = it.s[j] + step.ds[j];
    if (!(next.x[j] > 0.0) || !(next.s[j] > 0.0))
      throw InvariantViolationError("step left the strictly positive region");
  }
  for (int i = 0; i < n; ++i) next.y[i] = it.y[i] + step.dy[i];

  const double delta = mu_shrink_factor(m);
  next.mu = (1.0 - delta) * it.mu;
  next.sigma = centrality(next.x, next.s, next.mu);
  if (next.sigma > kSigmaMax + kSigmaSlack)
    throw InvariantViolationError("centrality bound violated after the step");
  return {std::move(next), std::move(step)};
}

Iterate advance(const StandardProblem& sp, const Iterate& it) {
  return advance_with_step(sp, it).first;
}

SolveReport solve_path(const StandardProblem& sp, const Iterate& start,
                       double mu_final, std::int64_t max_iters,
                       const StepObserver& observer) {
  check_iterate_shapes(sp, start);
  check_interior(start);
  if (!(start.mu > 0.0)) throw NonPositiveMuError("solve_path requires mu > 0");
  if (!(mu_final > 0.0))
    throw std::invalid_argument("solve_path: mu_final must be positive");
  if (start.sigma > kSigmaMax + kSigmaSlack)
    throw InvariantViolationError("starting centrality exceeds the ceiling");
  const double sigma_check = centrality(start.x, start.s, start.mu);
  if (std::abs(sigma_check - start.sigma) > 1e-10 * (1.0 + sigma_check))
    throw std::invalid_argument("solve_path: stored sigma does not match the point");

  const int m = sp.A.cols();
  SolveReport rep;
  rep.trace.push_back(make_record(sp, start, 0));

  if (mu_final >= start.mu) {
    // Nothing to shrink; acceptable only if the gap already meets the target.
    const double gap = dot(start.x, start.s);
    if (gap <= (5.0 / 3.0) * m * mu_final) {
      rep.status = Status::Optimal;
      fill_final(rep, sp, start);
      return rep;
    }
    throw std::invalid_argument("solve_path: mu_final is not below the starting mu");
  }

  Iterate it = start;
  while (it.mu > mu_final) {
    if (rep.iterations >= max_iters) {
      rep.status = Status::IterationLimit;
      fill_final(rep, sp, it);
      return rep;
    }
    try {
      auto [next, step] = advance_with_step(sp, it);
      if (observer) observer({it, step, next, mu_shrink_factor(m)});
      it = std::move(next);
    } catch (const IllConditionedError&) {
      rep.status = Status::IllConditioned;
      fill_final(rep, sp, it);
      return rep;
    }
    ++rep.iterations;
    rep.trace.push_back(make_record(sp, it, rep.iterations));
  }

  rep.status = Status::Optimal;
  fill_final(rep, sp, it);
  return rep;
}

std::int64_t iteration_bound(int m, double mu0, double mu_final) {
  if (m < 1) throw std::invalid_argument("iteration_bound requires m >= 1");
  if (!(mu0 > mu_final) || !(mu_final > 0.0))
    throw std::invalid_argument("iteration_bound requires mu0 > mu_final > 0");
  const double raw = 4.0 * std::sqrt(static_cast<double>(m)) * std::log(mu0 / mu_final);
  return static_cast<std::int64_t>(std::ceil(raw)) + 2;
}

StepResiduals step_residuals(const StandardProblem& sp, const Iterate& it,
                             double mu_target, const NewtonStep& step) {
  StepResiduals r{};
  r.primal_eq = inf_norm(sp.A.mul(step.dx));
  auto at_dy = sp.A.tmul(step.dy);
  double dual_eq = 0.0;
  for (size_t j = 0; j < at_dy.size(); ++j)
    dual_eq = std::max(dual_eq, std::abs(at_dy[j] + step.ds[j]));
  r.dual_eq = dual_eq;
  double comp = 0.0;
  for (size_t j = 0; j < it.x.size(); ++j) {
    const double lhs = step.dx[j] * it.s[j] + step.ds[j] * it.x[j];
    comp = std::max(comp, std::abs(lhs - (mu_target - it.x[j] * it.s[j])));
  }
  r.complement_eq = comp;
  r.step_dot = std::abs(dot(step.dx, step.ds));
  return r;
}

double step_residual_tolerance(const StandardProblem& sp) {
  return 1e-8 * (1.0 + inf_norm(sp.b) + inf_norm(sp.c));
}

}  // namespace pathlp
