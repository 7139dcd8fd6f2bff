#include "gnslab/profiles.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gnslab {

namespace {

const double kSampleGrid[] = {0.0,  0.05, 0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0,
                              3.0,  4.0,  5.0, 7.5,  10., 15.,  25., 50., 100.};

double bump(double r, double r0, double w) {
  const double z = (r - r0) / w;
  return std::exp(-z * z);
}

double bump_deriv(double r, double r0, double w) {
  const double z = (r - r0) / w;
  return -2.0 * z / w * std::exp(-z * z);
}

double tilt(double r, double k) {
  return r * r * std::pow(1.0 + r * r, -k);
}

double tilt_deriv(double r, double k) {
  return 2.0 * r * std::pow(1.0 + r * r, -k - 1.0) * (1.0 + r * r - k * r * r);
}

} // namespace

RadialProfile extremal_v(double a, const Params& p) {
  if (!(a > 0.0)) throw std::invalid_argument("extremal_v: a must be > 0");
  const double expo = 1.0 / (p.t - 1.0);
  RadialProfile v;
  v.value = [a, expo](double r) { return std::pow(1.0 + a * a * r * r, -expo); };
  v.deriv = [a, expo](double r) {
    return -2.0 * expo * a * a * r * std::pow(1.0 + a * a * r * r, -expo - 1.0);
  };
  v.tail_exponent = 2.0 * expo;
  v.sign = ProfileSign::nonnegative;
  std::ostringstream label;
  label << "v_a=" << a;
  v.label = label.str();
  return v;
}

HalfSpaceFunction lift(const RadialProfile& u, const Params& p) {
  for (double r : kSampleGrid) {
    if (!(u.value(r) > 0.0))
      throw std::domain_error("lift: profile must be strictly positive");
  }
  const double t = p.t;
  const double ns = p.n_s;
  auto uval = u.value;
  auto uder = u.deriv;

  HalfSpaceFunction f;
  f.value = [uval, t, ns](double r, double y) {
    return std::pow(std::pow(uval(r), 1.0 - t) + y * y, -0.5 * (ns - 2.0));
  };
  f.grad_sq = [uval, uder, t, ns](double r, double y) {
    const double ur = uval(r);
    const double base = std::pow(ur, 1.0 - t) + y * y;
    const double du = uder(r);
    const double xpart = (1.0 - t) * std::pow(ur, -t) * du;
    return 0.25 * (ns - 2.0) * (ns - 2.0) * (xpart * xpart + 4.0 * y * y) *
           std::pow(base, -ns);
  };
  f.tail_exponent = (ns - 2.0) * std::min(1.0, 0.5 * u.tail_exponent * (t - 1.0));
  f.label = "lift(" + u.label + ")";
  return f;
}

HalfSpaceFunction extremal_g(double c, double a, const Params& p) {
  if (!(a > 0.0)) throw std::invalid_argument("extremal_g: a must be > 0");
  const double ns = p.n_s;
  const double amp = c * std::pow(a, 0.5 * (ns - 2.0));

  HalfSpaceFunction g;
  g.value = [amp, a, ns](double r, double y) {
    return amp * std::pow(1.0 + a * a * (r * r + y * y), -0.5 * (ns - 2.0));
  };
  g.grad_sq = [c, a, ns](double r, double y) {
    const double rho2 = r * r + y * y;
    const double base = 1.0 + a * a * rho2;
    const double amp2 = c * c * std::pow(a, ns + 2.0);
    return amp2 * (ns - 2.0) * (ns - 2.0) * rho2 * std::pow(base, -ns);
  };
  g.tail_exponent = ns - 2.0;
  std::ostringstream label;
  label << "g_c=" << c << "_a=" << a;
  g.label = label.str();
  return g;
}

PerturbationFamily PerturbationFamily::from_json(const nlohmann::json& spec) {
  PerturbationFamily fam;
  const std::string kind = spec.at("kind").get<std::string>();
  if (kind == "multiplicative_bump") {
    fam.kind = PerturbationKind::multiplicative_bump;
    fam.r0 = 1.0;
    fam.w = 0.5;
  } else if (kind == "tail_tilt") {
    fam.kind = PerturbationKind::tail_tilt;
    fam.k = 2.0;
  } else if (kind == "dilation_null") {
    fam.kind = PerturbationKind::dilation_null;
  } else if (kind == "mass_shift") {
    fam.kind = PerturbationKind::mass_shift;
    fam.r0 = 3.0;
    fam.w = 0.5;
  } else {
    throw std::invalid_argument("PerturbationFamily: unknown kind '" + kind + "'");
  }

  if (spec.contains("params")) {
    const auto& q = spec.at("params");
    if (q.contains("r0")) fam.r0 = q.at("r0").get<double>();
    if (q.contains("w")) fam.w = q.at("w").get<double>();
    if (q.contains("k")) fam.k = q.at("k").get<double>();
  }
  if (fam.kind == PerturbationKind::tail_tilt && fam.k < 2.0)
    throw std::invalid_argument("PerturbationFamily: tail_tilt needs k >= 2");
  if (fam.w <= 0.0) throw std::invalid_argument("PerturbationFamily: w must be > 0");

  if (spec.contains("epsilon_max") && !spec.at("epsilon_max").is_string())
    fam.epsilon_max = spec.at("epsilon_max").get<double>();
  return fam;
}

nlohmann::json PerturbationFamily::to_json() const {
  nlohmann::json spec;
  spec["kind"] = name();
  nlohmann::json q;
  switch (kind) {
    case PerturbationKind::multiplicative_bump:
    case PerturbationKind::mass_shift:
      q["r0"] = r0;
      q["w"] = w;
      break;
    case PerturbationKind::tail_tilt:
      q["k"] = k;
      break;
    case PerturbationKind::dilation_null:
      break;
  }
  spec["params"] = q;
  spec["epsilon_max"] = family_epsilon_max(*this);
  return spec;
}

std::string PerturbationFamily::name() const {
  switch (kind) {
    case PerturbationKind::multiplicative_bump: return "multiplicative_bump";
    case PerturbationKind::tail_tilt: return "tail_tilt";
    case PerturbationKind::dilation_null: return "dilation_null";
    case PerturbationKind::mass_shift: return "mass_shift";
  }
  return "unknown";
}

double family_epsilon_max(const PerturbationFamily& family) {
  if (family.epsilon_max > 0.0) return family.epsilon_max;
  switch (family.kind) {
    case PerturbationKind::multiplicative_bump: {
      // positivity scan of the bump shape: 1 + eps phi > 0
      double peak = 0.0;
      for (int i = 0; i <= 4000; ++i) {
        const double r = 0.05 * i;
        peak = std::max(peak, bump(r, family.r0, family.w));
      }
      return 0.95 / peak;
    }
    case PerturbationKind::tail_tilt: {
      double peak = 0.0;
      for (int i = 0; i <= 4000; ++i) {
        const double r = 0.05 * i;
        peak = std::max(peak, tilt(r, family.k));
      }
      return 0.95 / peak;
    }
    case PerturbationKind::dilation_null:
      return 0.9;
    case PerturbationKind::mass_shift:
      return 0.5;
  }
  return 0.0;
}

RadialProfile perturb(const PerturbationFamily& family, double eps, const Params& p) {
  const double cap = family_epsilon_max(family);
  if (std::abs(eps) > cap)
    throw std::domain_error("perturb: |eps| exceeds the family positivity bound");

  if (family.kind == PerturbationKind::dilation_null) {
    RadialProfile prof = extremal_v(1.0 + eps, p);
    prof.label = "dilation_null(eps=" + std::to_string(eps) + ")";
    return prof;
  }

  RadialProfile v = extremal_v(1.0, p);
  const double r0 = family.r0;
  const double w = family.w;
  const double k = family.k;
  auto vval = v.value;
  auto vder = v.deriv;

  RadialProfile prof;
  prof.tail_exponent = v.tail_exponent;
  switch (family.kind) {
    case PerturbationKind::multiplicative_bump:
      prof.value = [vval, eps, r0, w](double r) { return vval(r) * (1.0 + eps * bump(r, r0, w)); };
      prof.deriv = [vval, vder, eps, r0, w](double r) {
        return vder(r) * (1.0 + eps * bump(r, r0, w)) + vval(r) * eps * bump_deriv(r, r0, w);
      };
      prof.sign = ProfileSign::nonnegative;
      break;
    case PerturbationKind::tail_tilt:
      prof.value = [vval, eps, k](double r) { return vval(r) * (1.0 + eps * tilt(r, k)); };
      prof.deriv = [vval, vder, eps, k](double r) {
        return vder(r) * (1.0 + eps * tilt(r, k)) + vval(r) * eps * tilt_deriv(r, k);
      };
      prof.sign = ProfileSign::nonnegative;
      break;
    case PerturbationKind::mass_shift:
      prof.value = [vval, eps, r0, w](double r) {
        return vval(r) * (1.0 - (1.0 + eps) * bump(r, r0, w));
      };
      prof.deriv = [vval, vder, eps, r0, w](double r) {
        return vder(r) * (1.0 - (1.0 + eps) * bump(r, r0, w)) -
               vval(r) * (1.0 + eps) * bump_deriv(r, r0, w);
      };
      prof.sign = ProfileSign::is_signed;
      break;
    case PerturbationKind::dilation_null:
      break; // handled above
  }
  std::ostringstream label;
  label << family.name() << "(eps=" << eps << ")";
  prof.label = label.str();
  return prof;
}

RadialProfile scale_profile(const RadialProfile& u, double c) {
  RadialProfile out = u;
  auto val = u.value;
  auto der = u.deriv;
  out.value = [val, c](double r) { return c * val(r); };
  out.deriv = [der, c](double r) { return c * der(r); };
  if (c < 0.0) out.sign = ProfileSign::is_signed;
  return out;
}

RadialProfile dilate_profile(const RadialProfile& u, double lambda, const Params& p) {
  if (!(lambda > 0.0)) throw std::invalid_argument("dilate_profile: lambda must be > 0");
  const double amp = std::pow(lambda, 0.5 * p.n / p.t);
  RadialProfile out = u;
  auto val = u.value;
  auto der = u.deriv;
  out.value = [val, amp, lambda](double r) { return amp * val(lambda * r); };
  out.deriv = [der, amp, lambda](double r) { return amp * lambda * der(lambda * r); };
  return out;
}

NormalizeResult normalize(const RadialProfile& u, const Params& p, double rel_tol,
                          long budget) {
  // norms of the input profile
  auto val = u.value;
  auto der = u.deriv;
  const double qtol = rel_tol * 0.1;

  Integrand1D l2t;
  l2t.eval = [val, &p](double r) { return std::pow(std::abs(val(r)), 2.0 * p.t); };
  l2t.tail_exponent = 2.0 * p.t * u.tail_exponent;
  Integrand1D lt1;
  lt1.eval = [val, &p](double r) { return std::pow(std::abs(val(r)), p.t + 1.0); };
  lt1.tail_exponent = (p.t + 1.0) * u.tail_exponent;
  Integrand1D grad;
  grad.eval = [der](double r) {
    const double g = der(r);
    return g * g;
  };
  grad.tail_exponent = 2.0 * (u.tail_exponent + 1.0);

  const double norm_2t_pow = integrate_radial(l2t, p.n, qtol, budget).value;
  const double norm_t1_pow = integrate_radial(lt1, p.n, qtol, budget).value;
  const double grad_sq = integrate_radial(grad, p.n, qtol, budget).value;
  if (!std::isfinite(norm_2t_pow) || !std::isfinite(norm_t1_pow) || !std::isfinite(grad_sq) ||
      norm_2t_pow <= 0.0)
    throw std::domain_error("normalize: non-finite or vanishing norms");

  const ExtremalNorms ref = extremal_norms(p);
  const double c = ref.l2t / std::pow(norm_2t_pow, 1.0 / (2.0 * p.t));

  // ratio of the two sides of the gradient constraint after the c-step
  const double ratio = ((p.t * p.t - 1.0) / (2.0 * p.n)) * c * c * grad_sq /
                       (std::pow(c, p.t + 1.0) * norm_t1_pow);
  const double lambda = std::pow(ratio, -2.0 * p.t / (p.n - p.n * p.t + 4.0 * p.t));

  NormalizeResult out;
  out.c = c;
  out.lambda = lambda;
  out.profile = dilate_profile(scale_profile(u, c), lambda, p);
  out.profile.label = "normalized(" + u.label + ")";
  return out;
}

} // namespace gnslab
