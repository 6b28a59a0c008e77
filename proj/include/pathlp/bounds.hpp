#pragma once

#include <vector>

namespace pathlp {

// ln(n! * U^n): log-space bound on the magnitude of any vertex coordinate of
// a system with n constraints and integer data bounded by U.
// Requires n >= 1 and U >= 1.
double log_vertex_bound(int n, double u);

// n! * U^n as a plain double, throws BoundOverflowError when it does not fit
// the floating range. Exact for desk-scale integer inputs.
double vertex_bound_value(int n, double u);

// ln(1 / (n! * U^n)): log-space lower bound on any nonzero vertex coordinate.
double log_min_nonzero_coordinate(int n, double u);

// 1 / (n! * U^n), throws BoundOverflowError when the reciprocal underflows.
double min_nonzero_coordinate_value(int n, double u);

// Artificial-variable cost: 2 * m * W * max(1, max_i |c_i|), a factor of two
// above the threshold that forces the artificial variable to zero whenever a
// feasible solution within the W box exists.
// Throws BoundOverflowError when the product does not fit.
double big_m(int m, double w, const std::vector<double>& c);

}  // namespace pathlp
