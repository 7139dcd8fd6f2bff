#pragma once

#include <functional>
#include <vector>

namespace gnslab {

// Deterministic derivative-free minimization. No randomness anywhere, so
// identical inputs give identical results within one build.
struct OptimizeResult {
  std::vector<double> x_star;
  double f_star = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Golden-section bracketing minimum of f on [lo, hi]. converged means the
// final bracket width is <= x_tol.
OptimizeResult minimize_scalar(const std::function<double(double)>& f, double lo, double hi,
                               double x_tol, int max_iter = 200);

// Nelder-Mead simplex in dim = x0.size() dimensions with the deterministic
// initial simplex {x0, x0 + scale_i e_i}. Stops when the simplex diameter is
// <= x_tol. Callers map positive parameters to log-space and reflected
// offsets themselves.
OptimizeResult minimize_simplex(const std::function<double(const std::vector<double>&)>& f,
                                const std::vector<double>& x0,
                                const std::vector<double>& scale, double x_tol,
                                int max_iter = 400);

// Two-dimensional simplex descent with one deterministic restart from the
// best point at halved scale.
OptimizeResult minimize_2d(const std::function<double(double, double)>& f,
                           const std::vector<double>& x0, const std::vector<double>& scale,
                           double x_tol, int max_iter = 400);

} // namespace gnslab
