#pragma once

#include <functional>
#include <stdexcept>

namespace gnslab {

// Deterministic adaptive quadrature for the integrals this library needs:
// semi-infinite 1D integrals with algebraic tails, radial integrals over R^n,
// two-center overlap integrals, and y^s-weighted integrals on the half space.

// Integrand on (0, inf). tail_exponent is a guarantee |eval(r)| <= M r^-beta
// for large r (beta > 1 required for convergence). If singular_at_zero,
// eval(r) ~ r^zero_exponent near 0 with zero_exponent > -1; the flag is also
// useful for integrands that vanish like a non-integer power at 0.
struct Integrand1D {
  std::function<double(double)> eval;
  double tail_exponent = 2.0;
  bool singular_at_zero = false;
  double zero_exponent = 0.0;
};

struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

// Thrown when the adaptive budget runs out before the error estimate meets
// the requested tolerance.
class quad_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr long kDefaultQuadBudget = 1'000'000;

// integral over a finite interval [a, b]; no endpoint mappings applied.
QuadResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                              double rel_tol, long budget = kDefaultQuadBudget);

// integral of f over (0, inf). Splits at r = 1 and maps (1, inf) onto (0, 1)
// using the declared tail exponent; a declared behaviour at 0 is flattened
// the same way.
QuadResult integrate_semi_infinite(const Integrand1D& f, double rel_tol,
                                   long budget = kDefaultQuadBudget);

// integral over R^n of the radial function x -> f(|x|):
//   n * omega_n * int_0^inf f(r) r^{n-1} dr.
QuadResult integrate_radial(const Integrand1D& f, int n, double rel_tol,
                            long budget = kDefaultQuadBudget);

// integral over R^n of x -> kernel(|x|, |x - d e1|, cos phi) where phi is the
// angle between x and e1. Bipolar reduction for n >= 2:
//   |S^{n-2}| int_0^inf int_0^pi k(r, rho, mu) r^{n-1} sin^{n-2}(phi) dphi dr,
// rho = sqrt(r^2 + d^2 - 2 r d mu), mu = cos phi. tail_exponent bounds the
// decay of sup_phi |kernel| in r; it must exceed n for convergence.
QuadResult integrate_bipolar(const std::function<double(double, double, double)>& kernel,
                             double d, int n, double tail_exponent, double rel_tol,
                             long budget = kDefaultQuadBudget);

// integral over R^n of x -> F(|x|) G(|x - d e1|). Symmetric in (F, G) by
// construction; reduces to integrate_radial of the product when d = 0.
QuadResult integrate_two_center(const Integrand1D& F, const Integrand1D& G, double d, int n,
                                double rel_tol, long budget = kDefaultQuadBudget);

// integral over the half space R_+^{n+1} of the x-radial function
// (x, y) -> h(|x|, y) against the measure y^s dx dy:
//   n * omega_n * int_0^inf int_0^inf h(r, y) r^{n-1} y^s dy dr.
// tail_r / tail_y bound the decay of h in each variable separately.
QuadResult integrate_halfspace_weighted(const std::function<double(double, double)>& h,
                                        double s, int n, double tail_r, double tail_y,
                                        double rel_tol, long budget = kDefaultQuadBudget);

} // namespace gnslab
