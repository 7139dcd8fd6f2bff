#pragma once

namespace gnslab {

// Gamma function on the real line via a Lanczos approximation (g = 7, 9
// coefficients). Relative accuracy is better than 1e-13 for the argument
// range used by this library (roughly 0.05 .. 300).
double gamma_fn(double x);

// log(Gamma(x)) for x > 0. Computed directly in log space so that ratios of
// huge Gamma values stay representable.
double log_gamma(double x);

// Volume of the unit ball in R^n.
double unit_ball_volume(int n);

// Surface measure of the unit m-sphere S^m embedded in R^{m+1}.
// surface_measure(0) = 2, surface_measure(1) = 2*pi, surface_measure(2) = 4*pi.
double surface_measure(int m);

} // namespace gnslab
