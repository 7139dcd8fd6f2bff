#pragma once

#include "gnslab/quad.hpp"

namespace gnslab {

// Closed-form parameters, exponents and sharp constants for the
// Gagliardo-Nirenberg-Sobolev family (p = 2, q = t+1, r = 2t) together with
// its dimension-reduced weighted Sobolev counterpart on the half space.
//
// Valid range: n >= 2 and 1 < t < (2n+1)/(2n-3) (read the bound as 5 for
// n = 2).
struct Params {
  int n = 0;          // dimension
  double t = 0.0;     // family parameter
  double theta = 0.0; // interpolation exponent
  double y_exp = 0.0; // y = (t+1)/(t-1)
  double two_t = 0.0; // reduced exponent 2(t)
  double s = 0.0;     // weight exponent of the half-space measure y^s
  double n_s = 0.0;   // effective dimension n + s + 1
  double two_star_s = 0.0; // critical exponent 2 n_s / (n_s - 2)
  double omega_n = 0.0;    // unit ball volume in R^n
  double a_gns = 0.0;      // sharp GNS constant A_{n,t}
  double s_sob = 0.0;      // sharp weighted Sobolev constant S_{n,s}
};

// Upper end of the admissible t-range for dimension n.
double t_upper_bound(int n);

// Populates every field; throws std::domain_error outside the valid range.
Params derive_params(int n, double t);

// D(a, b) = int_0^inf (1+r^2)^-a r^b dr
//         = Gamma((b+1)/2) Gamma((2a-b-1)/2) / (2 Gamma(a)),
// defined for b > -1 and 2a - b > 1.
double beta_integral(double a, double b);

// Norms of the centered extremal profile v = (1+r^2)^{-1/(t-1)}, all reduced
// to beta_integral values.
struct ExtremalNorms {
  double l2t_pow;  // ||v||_{2t}^{2t}
  double lt1_pow;  // ||v||_{t+1}^{t+1}
  double grad_sq;  // ||grad v||_2^2
  double l2t;      // ||v||_{2t}
  double lt1;      // ||v||_{t+1}
};
ExtremalNorms extremal_norms(const Params& p);

enum class SharpConstantMethod { identity, rayleigh };

// Sharp constant of the weighted Sobolev inequality. The identity method
// solves
//   A_{n,t}^{4t/2(t)} = S (n_s-2)^2 D(n_s,s)^{1-2/2(t)}
//                       * (n-nt+4t)/(2(t+1)) * ((t^2-1)/(2n))^{2 theta t/2(t)}
// for S; the rayleigh method evaluates the quotient
//   (int g^{2*_s} y^s)^{2/2*_s} / int |grad g|^2 y^s
// at the extremal g = (1 + |x|^2 + y^2)^{-(n_s-2)/2} by quadrature.
double sharp_constant_weighted_sobolev(const Params& p, SharpConstantMethod method,
                                       double rel_tol = 1e-10,
                                       long budget = kDefaultQuadBudget);

// Explicit constant chain controlling how a near-extremal half-space function
// can be recentered to unit scale and unit height. All values are finite and
// positive on the valid parameter range.
struct RecenteringConstants {
  double delta_1;        // threshold forcing a positive height coefficient
  double gamma;          // Chebyshev level for the good set
  double gamma_1;        // scale-displacement amplification
  double gamma_2;        // gradient-distance amplification of the rescale
  double delta_1_prime;  // threshold for the pointwise comparison
  double delta_1_dprime; // threshold keeping the scale near 1
  double c_0;            // final constant 2 (4 + gamma_2)
  double delta_0;        // min{delta_1, delta_1_prime, delta_1_dprime}
};
RecenteringConstants recentering_constants(const Params& p);

// Exponents appearing in the quantitative stability statements.
struct StabilityExponents {
  double cor_power;   // asymmetry power (t+1)/(t [2(1-theta) + (t+1) theta])
  double p_split;     // sign-splitting exponent 2(t+1)/(theta(t+1) + 2(1-theta))
  double alpha_split; // (t+1) theta / (theta(t+1) + 2(1-theta)), in (0,1)
  double sharp_power; // conjectured sharp asymmetry power 1/t
};
StabilityExponents stability_exponents(const Params& p);

} // namespace gnslab
