#pragma once

#include <functional>
#include <string>

#include <json.hpp>

#include "gnslab/params.hpp"

namespace gnslab {

enum class ProfileSign { nonnegative, is_signed };

// A centered radial function on R^n given as closed-form callables. Profiles
// stay centered; translations enter only through two-center quadrature.
struct RadialProfile {
  std::function<double(double)> value;
  std::function<double(double)> deriv; // radial derivative
  double tail_exponent = 1.0;          // |value(r)| <= M r^-tail for large r
  ProfileSign sign = ProfileSign::nonnegative;
  std::string label;
};

// A function on the half space R_+^{n+1}, radial in x.
struct HalfSpaceFunction {
  std::function<double(double, double)> value;   // (r, y)
  std::function<double(double, double)> grad_sq; // |d_r|^2 + |d_y|^2
  double tail_exponent = 1.0;                    // joint radial decay
  std::string label;
};

// Extremal profile v_{a,0}(r) = (1 + a^2 r^2)^{-1/(t-1)}.
RadialProfile extremal_v(double a, const Params& p);

// Dimension-reduction lift u -> (u(r)^{1-t} + y^2)^{-(n_s-2)/2} with the
// closed-form squared gradient. Throws if u is not strictly positive on the
// sample grid.
HalfSpaceFunction lift(const RadialProfile& u, const Params& p);

// Half-space extremal g_{c,a,0}(r, y) = c a^{(n_s-2)/2}
// (1 + a^2 r^2 + a^2 y^2)^{-(n_s-2)/2}.
HalfSpaceFunction extremal_g(double c, double a, const Params& p);

enum class PerturbationKind { multiplicative_bump, tail_tilt, dilation_null, mass_shift };

// Parameterized test-function generator around the extremal v.
//   multiplicative_bump: v (1 + eps exp(-(r-r0)^2/w^2))
//   tail_tilt:           v (1 + eps r^2 (1+r^2)^-k), k >= 2
//   dilation_null:       v_{1+eps} (zero-deficit control family)
//   mass_shift:          v (1 - (1+eps) exp(-(r-r0)^2/w^2)), signed
struct PerturbationFamily {
  PerturbationKind kind = PerturbationKind::multiplicative_bump;
  double r0 = 1.0;
  double w = 0.5;
  double k = 2.0;
  double epsilon_max = 0.0; // 0 requests the automatic positivity bound

  static PerturbationFamily from_json(const nlohmann::json& spec);
  nlohmann::json to_json() const;
  std::string name() const;
};

RadialProfile perturb(const PerturbationFamily& family, double eps, const Params& p);

// Resolves epsilon_max: the declared value if set, otherwise a positivity
// scan (with margin) for nonnegative kinds and a fixed cap for the others.
double family_epsilon_max(const PerturbationFamily& family);

struct NormalizeResult {
  double c;      // multiplicative factor ||v||_2t / ||u||_2t
  double lambda; // dilation u -> lambda^{n/2t} u(lambda r)
  RadialProfile profile;
};

// Two-step normalization onto the constraint pair
//   ||u||_2t = ||v||_2t  and  ((t^2-1)/(2n)) ||grad u||^2 = ||u||_{t+1}^{t+1}.
// The multiplicative step is applied first; the dilation leaves the 2t-norm
// unchanged, so the two conditions decouple and lambda has a closed form.
NormalizeResult normalize(const RadialProfile& u, const Params& p, double rel_tol = 1e-9,
                          long budget = kDefaultQuadBudget);

// c u(r) for a scalar c, keeping derivative and tail metadata.
RadialProfile scale_profile(const RadialProfile& u, double c);

// lambda^{n/(2t)} u(lambda r): the 2t-norm preserving dilation.
RadialProfile dilate_profile(const RadialProfile& u, double lambda, const Params& p);

} // namespace gnslab
