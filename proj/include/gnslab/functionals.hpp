#pragma once

#include <map>

#include "gnslab/params.hpp"
#include "gnslab/profiles.hpp"

namespace gnslab {

// Scalar functionals of a radial profile: norms, deficits, distances to the
// extremal manifold, density distances, entropy and moments.

struct ProfileNorms {
  double norm_2t_pow = 0.0; // ||u||_{2t}^{2t}
  double norm_t1_pow = 0.0; // ||u||_{t+1}^{t+1}
  double grad_sq = 0.0;     // ||grad u||_2^2
  double norm_2t = 0.0;
  double norm_t1 = 0.0;
};
ProfileNorms profile_norms(const RadialProfile& u, const Params& p, double rel_tol,
                           long budget = kDefaultQuadBudget);

struct Deficits {
  double delta_gns = 0.0;     // multiplicative deficit
  double delta_hat = 0.0;     // homogeneous-power deficit, direct evaluation
  double delta_hat_alt = 0.0; // same quantity through the relation to delta_gns
};

// Both deficits; the zero function maps to (0, 0, 0) by convention. The two
// delta_hat routes agree up to quadrature noise; the direct one is
// authoritative in reports.
Deficits gns_deficits(const RadialProfile& u, const Params& p, double rel_tol,
                      long budget = kDefaultQuadBudget);
Deficits gns_deficits(const ProfileNorms& norms, const Params& p);

// S_{n,s} int |grad f|^2 y^s - (int f^{2*_s} y^s)^{2/2*_s} by direct
// half-space quadrature.
double weighted_sobolev_deficit(const HalfSpaceFunction& f, const Params& p, double rel_tol,
                                long budget = kDefaultQuadBudget);

// Change-of-variable reductions of the lifted integrals to 1D norms:
//   int f^{2*_s} y^s       = D(n_s, s) ||u||_{2t}^{2t}
//   int |grad f|^2 y^s     = ((t-1)(n_s-2)/2)^2 D(n_s, s) ||grad u||^2
//                            + (n_s-2)^2 D(n_s, s+2) ||u||_{t+1}^{t+1}
struct LiftedIntegrals {
  double power_int = 0.0;
  double grad_sq_w = 0.0;
};
LiftedIntegrals lifted_integrals_closed_form(const ProfileNorms& norms, const Params& p);

// Gradient + half-power mass distance to the unit-scale extremal, minimized
// over the translation offset d >= 0 (the profile is expected to satisfy the
// normalization pair; a residual above 1e-6 only triggers a warning).
struct DistanceResult {
  double dist = 0.0;
  double d_star = 0.0;
  bool converged = false;
};
DistanceResult extremal_distance(const RadialProfile& u, const Params& p, double rel_tol,
                                 long budget = kDefaultQuadBudget);

// Asymmetry: infimal 2t-norm power distance from the 2t-normalized profile to
// the extremal family, minimized over scale a > 0 and offset d >= 0.
struct AsymmetryResult {
  double lambda = 0.0;
  double a_star = 1.0;
  double d_star = 0.0;
  bool converged = false;
};
AsymmetryResult asymmetry(const RadialProfile& u, const Params& p, double rel_tol,
                          long budget = kDefaultQuadBudget);

// L1 distances between densities and the mass-matched extremal families:
//   l1_2t = inf_{a,d} || u^{2t} - a^n v_{a,d}^{2t} ||_1
//   l1_t1 = inf_{a}   || u^{t+1} - a^n v_{a,0}^{t+1} ||_1   (centered family)
struct L1Distances {
  double l1_2t = 0.0;
  double l1_t1 = 0.0;
  double a_star = 1.0; // minimizer of the t+1 distance
  bool converged = false;
};
L1Distances l1_density_distances(const RadialProfile& u, const Params& p, double rel_tol,
                                 long budget = kDefaultQuadBudget);

// Entropy S(u) = int u^{t+1} ln(u^{t+1}) and p-moment N_p(u) = int |x|^p
// u^{t+1}. Throws std::domain_error when the declared tail cannot support a
// finite moment (p + n >= (t+1) tail).
struct DensityStats {
  double entropy = 0.0;
  double moment_p = 0.0;
};
DensityStats density_statistics(const RadialProfile& u, double p_moment, const Params& p,
                                double rel_tol, long budget = kDefaultQuadBudget);

// Largest usable moment order for a profile with the given tail exponent.
double moment_order_limit(const Params& p, double tail_exponent);

// Ball-restricted density integrals (radius R around the origin).
double density_mass_ball(const RadialProfile& u, double radius, const Params& p,
                         double rel_tol, long budget = kDefaultQuadBudget);
double density_entropy_ball(const RadialProfile& u, double radius, const Params& p,
                            double rel_tol, long budget = kDefaultQuadBudget);

// Sign-splitting machinery for signed profiles. split_lhs is
// (a^{p/2t} + (1-a)^{p/2t})^{1/p} - 1 with a the positive 2t-mass fraction;
// it is checked against delta_gns and a violation beyond tolerance throws.
struct SignSplit {
  double min_mass_ratio = 0.0; // min{int u_-^{2t}, int u_+^{2t}} / ||u||_{2t}^{2t}
  double split_lhs = 0.0;
  double pos_fraction = 0.0;
  double delta_gns = 0.0;
};
SignSplit sign_split_ratio(const RadialProfile& u, const Params& p, double rel_tol,
                           long budget = kDefaultQuadBudget);

// Sandwich constant B with B^{-1} delta <= delta_hat <= B delta whenever
// delta <= 1, for a profile with the given 2t-norm.
double sandwich_constant(const Params& p, double norm_2t);

// Everything above for one profile, with the wire-format field names. The
// t+1 density distance is evaluated in its natural frame (profile rescaled to
// ||u||_{t+1} = ||v||_{t+1}); all other entries use the profile as given.
// moment_p is NaN when the p-moment diverges.
struct DeficitReport {
  std::map<double, double> lq_norms; // q -> ||u||_q, at least q = t+1 and 2t
  double grad_l2_sq = 0.0;
  double delta_gns = 0.0;
  double delta_hat = 0.0;
  double thm11_dist = 0.0;
  double thm11_d_star = 0.0;
  double asymmetry = 0.0;
  double asym_a_star = 1.0;
  double asym_d_star = 0.0;
  double l1_dist_2t = 0.0;
  double l1_dist_t1 = 0.0;
  double l1_a_star = 1.0;
  double entropy = 0.0;
  double moment_p = 0.0;
  double p_used = 0.0;
};
DeficitReport full_report(const RadialProfile& u, const Params& p, double p_moment,
                          double rel_tol, long budget = kDefaultQuadBudget);

} // namespace gnslab
