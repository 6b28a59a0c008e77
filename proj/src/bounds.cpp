#include "pathlp/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pathlp/errors.hpp"

namespace pathlp {

namespace {

void check_args(int n, double u) {
  if (n < 1) throw std::invalid_argument("bound requires n >= 1");
  if (!(u >= 1.0) || !std::isfinite(u))
    throw std::invalid_argument("bound requires finite U >= 1");
}

}  // namespace

double log_vertex_bound(int n, double u) {
  check_args(n, u);
  return std::lgamma(static_cast<double>(n) + 1.0) + n * std::log(u);
}

double vertex_bound_value(int n, double u) {
  check_args(n, u);
  double w = 1.0;
  for (int i = 2; i <= n; ++i) {
    w *= i;
    if (!std::isfinite(w)) throw BoundOverflowError("vertex bound overflows; supply W explicitly");
  }
  for (int i = 0; i < n; ++i) {
    w *= u;
    if (!std::isfinite(w)) throw BoundOverflowError("vertex bound overflows; supply W explicitly");
  }
  return w;
}

double log_min_nonzero_coordinate(int n, double u) {
  return -log_vertex_bound(n, u);
}

double min_nonzero_coordinate_value(int n, double u) {
  const double w = vertex_bound_value(n, u);
  const double v = 1.0 / w;
  if (v == 0.0) throw BoundOverflowError("minimum coordinate bound underflows");
  return v;
}

double big_m(int m, double w, const std::vector<double>& c) {
  if (m < 1) throw std::invalid_argument("big_m requires m >= 1");
  if (!(w > 0.0) || !std::isfinite(w))
    throw std::invalid_argument("big_m requires finite W > 0");
  double cmax = 1.0;
  for (double v : c) cmax = std::max(cmax, std::abs(v));
  const double out = 2.0 * m * w * cmax;
  if (!std::isfinite(out)) throw BoundOverflowError("big-M cost overflows; supply it explicitly");
  return out;
}

}  // namespace pathlp
