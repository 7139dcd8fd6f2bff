#include "gnslab/params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gnslab/special.hpp"

namespace gnslab {

double t_upper_bound(int n) { return (2.0 * n + 1.0) / (2.0 * n - 3.0); }

double beta_integral(double a, double b) {
  if (!(b > -1.0) || !(2.0 * a - b > 1.0))
    throw std::domain_error("beta_integral: need b > -1 and 2a - b > 1");
  // log-space keeps ratios of large Gamma values representable
  return 0.5 * std::exp(log_gamma(0.5 * (b + 1.0)) + log_gamma(0.5 * (2.0 * a - b - 1.0)) -
                        log_gamma(a));
}

Params derive_params(int n, double t) {
  if (n < 2) throw std::domain_error("derive_params: n must be >= 2");
  const double t_max = t_upper_bound(n);
  if (!(t > 1.0) || !(t < t_max)) {
    std::ostringstream msg;
    msg << "derive_params: t = " << t << " out of range; need 1 < t < (2n+1)/(2n-3) = "
        << t_max << " for n = " << n;
    throw std::domain_error(msg.str());
  }

  Params p;
  p.n = n;
  p.t = t;
  p.y_exp = (t + 1.0) / (t - 1.0);
  p.theta = n * (t - 1.0) / (t * (2.0 * n - (1.0 + t) * (n - 2.0)));
  p.two_t = 2.0 * (4.0 * t + n - n * t) / (n + 2.0 + 2.0 * t - n * t);
  // single-fraction form avoids cancellation near the range boundary
  p.s = (2.0 * n + 1.0 - (2.0 * n - 3.0) * t) / (t - 1.0);
  p.n_s = n + p.s + 1.0;
  p.two_star_s = 2.0 * p.n_s / (p.n_s - 2.0);
  p.omega_n = unit_ball_volume(n);

  const double y = p.y_exp;
  p.a_gns = std::pow(y * (t - 1.0) * (t - 1.0) / (2.0 * std::numbers::pi * n), 0.5 * p.theta) *
            std::pow((2.0 * y - n) / (2.0 * y), 1.0 / (2.0 * t)) *
            std::exp((p.theta / n) * (log_gamma(y) - log_gamma(y - 0.5 * n)));

  p.s_sob = sharp_constant_weighted_sobolev(p, SharpConstantMethod::identity);
  return p;
}

ExtremalNorms extremal_norms(const Params& p) {
  const double shell = p.n * p.omega_n;
  const double inv = 1.0 / (p.t - 1.0);
  ExtremalNorms norms;
  norms.l2t_pow = shell * beta_integral(2.0 * p.t * inv, p.n - 1.0);
  norms.lt1_pow = shell * beta_integral((p.t + 1.0) * inv, p.n - 1.0);
  norms.grad_sq = 4.0 * inv * inv * shell * beta_integral(2.0 * p.t * inv, p.n + 1.0);
  norms.l2t = std::pow(norms.l2t_pow, 1.0 / (2.0 * p.t));
  norms.lt1 = std::pow(norms.lt1_pow, 1.0 / (p.t + 1.0));
  return norms;
}

double sharp_constant_weighted_sobolev(const Params& p, SharpConstantMethod method,
                                       double rel_tol, long budget) {
  if (method == SharpConstantMethod::identity) {
    const double q = 4.0 * p.t / p.two_t;
    const double lhs = std::pow(p.a_gns, q);
    const double factor =
        (p.n_s - 2.0) * (p.n_s - 2.0) *
        std::pow(beta_integral(p.n_s, p.s), 1.0 - 2.0 / p.two_t) *
        (p.n - p.n * p.t + 4.0 * p.t) / (2.0 * (p.t + 1.0)) *
        std::pow((p.t * p.t - 1.0) / (2.0 * p.n), 2.0 * p.theta * p.t / p.two_t);
    return lhs / factor;
  }

  // Rayleigh quotient at the centered unit-scale extremal. The numerator
  // power uses (n_s-2)/2 * 2*_s = n_s.
  const double ns = p.n_s;
  auto gp = [ns](double r, double y) { return std::pow(1.0 + r * r + y * y, -ns); };
  auto ggrad = [ns](double r, double y) {
    const double base = 1.0 + r * r + y * y;
    return (ns - 2.0) * (ns - 2.0) * (r * r + y * y) * std::pow(base, -ns);
  };
  QuadResult num = integrate_halfspace_weighted(gp, p.s, p.n, 2.0 * ns, 2.0 * ns, rel_tol,
                                                budget);
  QuadResult den = integrate_halfspace_weighted(ggrad, p.s, p.n, 2.0 * ns - 2.0,
                                                2.0 * ns - 2.0, rel_tol, budget);
  return std::pow(num.value, 2.0 / p.two_star_s) / den.value;
}

RecenteringConstants recentering_constants(const Params& p) {
  const ExtremalNorms norms = extremal_norms(p);
  const double ns = p.n_s;
  const double q = 4.0 * p.t / p.two_t;

  RecenteringConstants c;
  c.delta_1 = (ns - 2.0) * (ns - 2.0) * beta_integral(ns, 2.0 + p.s) *
              std::pow((p.t * p.t - 1.0) / (2.0 * p.n), 2.0 * p.theta * p.t / p.two_t) *
              std::pow(norms.l2t / p.a_gns, q);
  c.gamma = 2.0 * (p.s + 3.0) * std::pow(4.0, p.s + 4.0) /
            ((ns - 2.0) * (ns - 2.0) * p.omega_n);
  c.delta_1_prime = 1.0 / (4.0 * std::pow(3.0, ns) * c.gamma);
  const double g1_root = 32.0 * std::pow(3.0, ns) / ns;
  c.gamma_1 = g1_root * g1_root * c.gamma;
  c.delta_1_dprime = ns * ns / (4096.0 * std::pow(3.0, 2.0 * ns) * c.gamma);

  // closed form of int (1+|x|^2+y^2)^-(n_s-1) y^s over the half space
  const double halfspace_integral =
      std::pow(std::numbers::pi, 0.5 * p.n) *
      std::exp(log_gamma(0.5 * (1.0 + p.s)) + log_gamma(0.5 * (ns - 2.0)) -
               log_gamma(ns - 1.0)) /
      2.0;
  c.gamma_2 = (ns - 2.0) * (ns - 2.0) * ns * ns * std::pow(2.0, ns - 4.0) *
              std::pow(2.0, 4.0 * ns / (ns - 2.0)) * halfspace_integral * c.gamma_1;
  c.c_0 = 2.0 * (4.0 + c.gamma_2);
  c.delta_0 = std::min({c.delta_1, c.delta_1_prime, c.delta_1_dprime});
  return c;
}

StabilityExponents stability_exponents(const Params& p) {
  StabilityExponents e;
  const double den = p.theta * (p.t + 1.0) + 2.0 * (1.0 - p.theta);
  e.cor_power = (p.t + 1.0) / (p.t * den);
  e.p_split = 2.0 * (p.t + 1.0) / den;
  e.alpha_split = (p.t + 1.0) * p.theta / den;
  e.sharp_power = 1.0 / p.t;
  return e;
}

} // namespace gnslab
