#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pathlp/model.hpp"

namespace pathlp {

// Centrality ceiling maintained by the iteration, with a small slack so a
// value sitting exactly on the bound is not rejected for rounding noise.
inline constexpr double kSigmaMax = 2.0 / 3.0;
inline constexpr double kSigmaSlack = 1e-9;

enum class Status {
  Optimal,
  Infeasible,
  BigMInsufficientOrInfeasible,
  IllConditioned,
  IterationLimit,
};

const char* to_string(Status s);

// Strictly interior primal-dual point together with its barrier parameter
// and centrality measure.
struct Iterate {
  std::vector<double> x;  // primal, length m, strictly positive
  std::vector<double> y;  // dual, length n
  std::vector<double> s;  // dual slack, length m, strictly positive
  double mu = 0.0;
  double sigma = 0.0;
};

// Newton direction for the relaxed complementarity system.
struct NewtonStep {
  std::vector<double> dx;  // primal direction
  std::vector<double> dy;  // dual direction
  std::vector<double> ds;  // dual slack direction
};

// Per-iteration observability record.
struct TraceRecord {
  std::int64_t iter = 0;
  double mu = 0.0;
  double sigma = 0.0;
  double primal_obj = 0.0;  // c^T x
  double dual_obj = 0.0;    // b^T y
  double gap = 0.0;         // x^T s
  double primal_res = 0.0;  // ||A x - b||_inf
  double dual_res = 0.0;    // ||A^T y + s - c||_inf
};

struct SolveReport {
  Status status = Status::Optimal;
  std::vector<double> x, y, s;
  double primal_obj = 0.0;
  double dual_obj = 0.0;
  double gap = 0.0;
  std::int64_t iterations = 0;
  std::vector<TraceRecord> trace;  // trace[0] is the starting point
};

// sqrt(sum_i (x_i s_i / mu - 1)^2). Throws NonPositiveMuError for mu <= 0.
double centrality(const std::vector<double>& x, const std::vector<double>& s,
                  double mu);

// Barrier shrink factor 1 / (4 sqrt(m)).
double mu_shrink_factor(int m);

// Computes the direction solving
//   A dx = 0,  A^T dy + ds = 0,  s_i dx_i + x_i ds_i = mu - x_i s_i
// via the normal equations (A S^-1 X A^T) dy = b - mu A S^-1 e, then
// ds = -A^T dy and dx = -(X/S) ds + mu / s - x.
// Throws IllConditionedError when the normal matrix cannot be factored.
NewtonStep newton_step(const StandardProblem& sp, const Iterate& it,
                       double mu_target);

// One full iteration: Newton step at the current mu, move, then shrink mu by
// (1 - delta). Throws InvariantViolationError if the new point loses strict
// positivity or its centrality exceeds the ceiling.
Iterate advance(const StandardProblem& sp, const Iterate& it);

// advance plus the step it applied; solve_path uses this to expose the step
// to observers without recomputing it.
std::pair<Iterate, NewtonStep> advance_with_step(const StandardProblem& sp,
                                                 const Iterate& it);

// Called after each accepted iteration with the point before the step, the
// step, and the accepted point (mu already shrunk, sigma recomputed).
struct StepEvent {
  const Iterate& before;
  const NewtonStep& step;
  const Iterate& after;
  double delta;
};
using StepObserver = std::function<void(const StepEvent&)>;

// Runs the iteration until mu <= mu_final, recording one TraceRecord per
// iteration after the starting record. IllConditioned and the iteration cap
// are reported in-band via the status; InvariantViolationError propagates.
SolveReport solve_path(const StandardProblem& sp, const Iterate& start,
                       double mu_final, std::int64_t max_iters,
                       const StepObserver& observer = {});

// A-priori iteration cap: ceil(4 sqrt(m) ln(mu0/mu_final)) + 2.
std::int64_t iteration_bound(int m, double mu0, double mu_final);

// Residuals of the step equations, used by tests and the acceptance suite.
struct StepResiduals {
  double primal_eq;     // ||A dx||_inf
  double dual_eq;       // ||A^T dy + ds||_inf
  double complement_eq;  // max_i |s_i dx_i + x_i ds_i - (mu - x_i s_i)|
  double step_dot;      // |dx . ds|
};
StepResiduals step_residuals(const StandardProblem& sp, const Iterate& it,
                             double mu_target, const NewtonStep& step);

// Scale-aware tolerance for the step equations: 1e-8 (1 + ||b|| + ||c||).
double step_residual_tolerance(const StandardProblem& sp);

}  // namespace pathlp
