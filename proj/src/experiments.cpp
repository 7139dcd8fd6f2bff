#include "gnslab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

#include "gnslab/optimize.hpp"
#include "gnslab/special.hpp"

namespace gnslab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

} // namespace

FitResult fit_exponent(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 3)
    throw std::invalid_argument("fit_exponent: need at least 3 paired points");
  std::vector<double> lx(xs.size()), ly(ys.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    if (!finite_positive(xs[i]) || !finite_positive(ys[i]))
      throw std::invalid_argument("fit_exponent: data must be positive and finite");
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
  }
  const double nn = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= nn;
  my /= nn;
  double sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_exponent: all abscissae equal");

  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (syy == 0.0) {
    fit.r_squared = 1.0;
  } else {
    double ss_res = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
      const double e = ly[i] - (fit.intercept + fit.slope * lx[i]);
      ss_res += e * e;
    }
    fit.r_squared = 1.0 - ss_res / syy;
  }
  return fit;
}

LiftIdentityCheck verify_lift_identity(const RadialProfile& u, const Params& p,
                                       double rel_tol, long budget) {
  NormalizeResult norm = normalize(u, p, rel_tol, budget);
  ProfileNorms norms = profile_norms(norm.profile, p, rel_tol, budget);
  Deficits defs = gns_deficits(norms, p);
  HalfSpaceFunction f = lift(norm.profile, p);

  const double d_s = beta_integral(p.n_s, p.s);

  LiftIdentityCheck check;
  check.lhs = std::pow(d_s, 2.0 / p.two_t) * defs.delta_hat;
  check.rhs_quad = weighted_sobolev_deficit(f, p, rel_tol, budget);

  LiftedIntegrals closed = lifted_integrals_closed_form(norms, p);
  check.rhs_closed =
      p.s_sob * closed.grad_sq_w - std::pow(closed.power_int, 2.0 / p.two_star_s);

  // the difference error scales with the full integral magnitudes, not with
  // the (possibly tiny) deficit itself
  const double scale =
      1.0 + p.s_sob * closed.grad_sq_w + std::pow(closed.power_int, 2.0 / p.two_star_s);
  check.combined_tol = 50.0 * rel_tol * scale;
  check.pass = std::abs(check.lhs - check.rhs_quad) <= check.combined_tol &&
               std::abs(check.lhs - check.rhs_closed) <= check.combined_tol;
  return check;
}

double extremal_gradient_norm_sq(const Params& p) {
  const double ns = p.n_s;
  const double angular = std::exp(log_gamma(0.5 * p.n) + log_gamma(0.5 * (p.s + 1.0)) -
                                  log_gamma(0.5 * ns)) /
                         2.0;
  return (ns - 2.0) * (ns - 2.0) * p.n * p.omega_n * angular *
         beta_integral(ns, ns + 1.0);
}

namespace {

// Iterated half-space integral of a two-center kernel: outer bipolar in x,
// inner semi-infinite in y with the weight y^s.
double halfspace_bipolar(const std::function<double(double, double, double, double)>& kernel,
                         double d, int n, double s, double tail_x, double tail_y,
                         double rel_tol, long budget) {
  std::atomic<long> used{0};
  auto outer = [&](double r, double rho, double mu) {
    Integrand1D inner;
    inner.eval = [&kernel, r, rho, mu, s](double y) {
      return kernel(r, rho, mu, y) * std::pow(y, s);
    };
    inner.tail_exponent = tail_y - s;
    inner.singular_at_zero = true;
    inner.zero_exponent = s;
    const long room = budget - used.load();
    if (room < 3000) throw quad_error("halfspace_bipolar: budget exhausted");
    QuadResult res = integrate_semi_infinite(inner, rel_tol * 0.25, room);
    used += res.evaluations;
    return res.value;
  };
  return integrate_bipolar(outer, d, n, tail_x, rel_tol, budget).value;
}

struct LiftGradient {
  // signed radial and vertical components of grad f for the lift of u
  std::function<double(double, double)> radial;   // (r, y)
  std::function<double(double, double)> vertical; // (r, y)
  double tail; // joint decay of |grad f|
};

LiftGradient lift_gradient(const RadialProfile& u, const Params& p) {
  const double t = p.t;
  const double ns = p.n_s;
  auto uval = u.value;
  auto uder = u.deriv;
  LiftGradient g;
  g.radial = [uval, uder, t, ns](double r, double y) {
    const double ur = uval(r);
    const double base = std::pow(ur, 1.0 - t) + y * y;
    return -0.5 * (ns - 2.0) * (1.0 - t) * std::pow(ur, -t) * uder(r) *
           std::pow(base, -0.5 * ns);
  };
  g.vertical = [uval, t, ns](double r, double y) {
    const double base = std::pow(uval(r), 1.0 - t) + y * y;
    return -(ns - 2.0) * y * std::pow(base, -0.5 * ns);
  };
  g.tail = (ns - 1.0) * std::min(1.0, 0.5 * u.tail_exponent * (t - 1.0));
  return g;
}

} // namespace

double lift_gradient_pairing(const RadialProfile& u, const Params& p, double a, double d,
                             double rel_tol, long budget) {
  // divergence form: the extremal solves the weighted equation, so
  //   <grad f, grad g_{1,a,d}> = n_s (n_s-2) a^{(n_s+2)/2}
  //        int f (1 + a^2 rho^2 + a^2 y^2)^{-(n_s+2)/2} y^s
  const double t = p.t;
  const double ns = p.n_s;
  auto uval = u.value;
  const double amp = ns * (ns - 2.0) * std::pow(a, 0.5 * (ns + 2.0));
  const double f_tail = (ns - 2.0) * std::min(1.0, 0.5 * u.tail_exponent * (t - 1.0));
  const double tail_x = f_tail + ns + 2.0;
  const double tail_y = f_tail + ns + 2.0;

  auto kernel = [uval, t, ns, a](double r, double rho, double, double y) {
    const double fval = std::pow(std::pow(uval(r), 1.0 - t) + y * y, -0.5 * (ns - 2.0));
    const double gpow = std::pow(1.0 + a * a * (rho * rho + y * y), -0.5 * (ns + 2.0));
    return fval * gpow;
  };

  if (d < 1e-9) {
    // centered case: single half-space integral
    auto h = [uval, t, ns, a](double r, double y) {
      const double fval = std::pow(std::pow(uval(r), 1.0 - t) + y * y, -0.5 * (ns - 2.0));
      const double gpow = std::pow(1.0 + a * a * (r * r + y * y), -0.5 * (ns + 2.0));
      return fval * gpow;
    };
    return amp *
           integrate_halfspace_weighted(h, p.s, p.n, tail_x, tail_y, rel_tol, budget).value;
  }
  return amp * halfspace_bipolar(kernel, d, p.n, p.s, tail_x, tail_y, rel_tol, budget);
}

double lift_gradient_distance(const RadialProfile& u, const Params& p, double c, double a,
                              double d, double rel_tol, long budget) {
  const double ns = p.n_s;
  LiftGradient fg = lift_gradient(u, p);
  const double gamp = (ns - 2.0) * std::pow(a, 0.5 * (ns + 2.0));

  // radial component of grad g points along the displaced center
  auto g_radial = [gamp, a, ns](double rho, double y) {
    return -gamp * rho * std::pow(1.0 + a * a * (rho * rho + y * y), -0.5 * ns);
  };
  auto g_vertical = [gamp, a, ns](double rho, double y) {
    return -gamp * y * std::pow(1.0 + a * a * (rho * rho + y * y), -0.5 * ns);
  };

  const double tail = 2.0 * std::min(fg.tail, ns - 1.0);
  const double tail_y = tail + p.s + 1.0; // headroom; actual decay is faster

  if (d < 1e-9) {
    auto h = [&, c](double r, double y) {
      const double dr = fg.radial(r, y) - c * g_radial(r, y);
      const double dy = fg.vertical(r, y) - c * g_vertical(r, y);
      return dr * dr + dy * dy;
    };
    return integrate_halfspace_weighted(h, p.s, p.n, tail, tail_y, rel_tol, budget).value;
  }

  auto kernel = [&, c, d](double r, double rho, double mu, double y) {
    const double fr = fg.radial(r, y);
    const double fy = fg.vertical(r, y);
    const double gr = c * g_radial(rho, y);
    const double gy = c * g_vertical(rho, y);
    // unit-vector alignment between the two radial directions
    const double align = rho > 1e-300 ? (r - d * mu) / rho : 0.0;
    return fr * fr + gr * gr - 2.0 * fr * gr * align + (fy - gy) * (fy - gy);
  };
  return halfspace_bipolar(kernel, d, p.n, p.s, tail, tail_y, rel_tol, budget);
}

int resolve_thread_count(int requested, int points) {
  int threads = requested;
  if (threads <= 0) {
    if (const char* env = std::getenv("GNSLAB_THREADS")) threads = std::atoi(env);
  }
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 0) threads = 1;
  return std::min(threads, std::max(points, 1));
}

std::vector<double> logspace(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2)
    throw std::invalid_argument("logspace: need 0 < lo < hi and count >= 2");
  std::vector<double> grid(count);
  const double step = (std::log(hi) - std::log(lo)) / (count - 1);
  for (int i = 0; i < count; ++i) grid[i] = std::exp(std::log(lo) + step * i);
  grid.back() = hi;
  return grid;
}

namespace {

void run_parallel(int points, int threads, const std::function<void(int)>& work) {
  if (threads <= 1) {
    for (int i = 0; i < points; ++i) work(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const int i = next.fetch_add(1);
        if (i >= points) break;
        work(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

// noise floor below which a deficit is treated as an exact zero
constexpr double kDeficitFloor = 1e-10;

void fit_if_possible(ScanResult& scan, const std::string& name,
                     const std::function<double(const DeficitReport&)>& pick) {
  std::vector<double> xs, ys;
  for (size_t i = 0; i < scan.reports.size(); ++i) {
    if (!scan.diagnostics[i].ok) continue;
    const double y = pick(scan.reports[i]);
    if (finite_positive(y) && y > 1e-30) {
      xs.push_back(scan.eps_grid[i]);
      ys.push_back(y);
    }
  }
  if (xs.size() >= 3) scan.fitted[name] = fit_exponent(xs, ys);
}

// sup over valid grid points of num/den^power, skipping den below the floor
Verdict ratio_verdict(const ScanResult& scan,
                      const std::function<double(const DeficitReport&)>& num,
                      const std::function<double(const DeficitReport&)>& den, double power,
                      const std::string& label) {
  Verdict v;
  double sup = 0.0;
  int used = 0;
  for (size_t i = 0; i < scan.reports.size(); ++i) {
    if (!scan.diagnostics[i].ok) continue;
    const double d = den(scan.reports[i]);
    if (!(d > kDeficitFloor)) continue;
    const double ratio = num(scan.reports[i]) / std::pow(d, power);
    if (!std::isfinite(ratio)) {
      v.pass = false;
      v.note = label + ": non-finite ratio";
      return v;
    }
    sup = std::max(sup, ratio);
    ++used;
  }
  if (used == 0) {
    v.pass = true;
    v.margin = 0.0;
    v.note = label + ": equality family (all deficits at noise floor)";
    return v;
  }
  v.pass = true;
  v.margin = sup;
  v.note = label;
  return v;
}

} // namespace

ScanResult stability_scan(const PerturbationFamily& family, const std::vector<double>& eps_grid,
                          const Params& p, double p_moment, double rel_tol, long budget,
                          int threads) {
  for (size_t i = 1; i < eps_grid.size(); ++i)
    if (!(eps_grid[i] > eps_grid[i - 1]) || !(eps_grid[0] > 0.0))
      throw std::invalid_argument("stability_scan: eps grid must be positive increasing");

  ScanResult scan;
  scan.kind = "stability";
  scan.family = family;
  scan.params = p;
  scan.p_moment = p_moment;
  scan.rel_tol = rel_tol;
  scan.eps_grid = eps_grid;
  scan.reports.resize(eps_grid.size());
  scan.diagnostics.resize(eps_grid.size());

  const ExtremalNorms ref = extremal_norms(p);
  const int workers = resolve_thread_count(threads, static_cast<int>(eps_grid.size()));

  run_parallel(static_cast<int>(eps_grid.size()), workers, [&](int i) {
    PointDiagnostics& diag = scan.diagnostics[i];
    try {
      RadialProfile raw = perturb(family, eps_grid[i], p);
      NormalizeResult norm = normalize(raw, p, rel_tol, budget);
      diag.norm_c = norm.c;
      diag.norm_lambda = norm.lambda;

      scan.reports[i] = full_report(norm.profile, p, p_moment, rel_tol, budget);

      LiftIdentityCheck lic = verify_lift_identity(raw, p, rel_tol, budget);
      diag.lift_lhs = lic.lhs;
      diag.lift_rhs_quad = lic.rhs_quad;
      diag.lift_rhs_closed = lic.rhs_closed;
      diag.lift_identity_pass = lic.pass;

      // hypothesis records and the rescale identity in the t+1-matched frame
      ProfileNorms raw_norms = profile_norms(raw, p, rel_tol, budget);
      RadialProfile u13 = scale_profile(raw, ref.lt1 / raw_norms.norm_t1);
      if (p_moment > 1.0 && p_moment < moment_order_limit(p, u13.tail_exponent)) {
        DensityStats stats = density_statistics(u13, p_moment, p, rel_tol, budget);
        diag.entropy_t13 = stats.entropy;
        diag.moment_t13 = stats.moment_p;
      } else {
        diag.entropy_t13 = kNaN;
        diag.moment_t13 = kNaN;
      }

      {
        NormalizeResult n13 = normalize(u13, p, rel_tol, budget);
        ProfileNorms norms13 = profile_norms(u13, p, rel_tol, budget);
        const double a = n13.lambda;
        const double mass_scale =
            std::pow(norms13.norm_2t, p.t + 1.0) * std::pow(a, p.n * (p.t - 1.0) / (2.0 * p.t));
        diag.step4_rhs = std::abs(mass_scale - std::pow(ref.l2t, p.t + 1.0)) / mass_scale *
                         ref.lt1_pow;
        // direct quadrature of the mass difference between the two rescalings
        auto tilde = n13.profile.value;
        auto val13 = u13.value;
        const double lam = n13.lambda;
        const double amp_t1 = std::pow(lam, p.n / (p.t + 1.0));
        Integrand1D diff;
        diff.eval = [tilde, val13, lam, amp_t1, &p](double r) {
          const double lhs = std::pow(std::abs(tilde(r)), p.t + 1.0);
          const double rhs = std::pow(std::abs(amp_t1 * val13(lam * r)), p.t + 1.0);
          return std::abs(lhs - rhs);
        };
        diff.tail_exponent = (p.t + 1.0) * u13.tail_exponent;
        diag.step4_lhs = integrate_radial(diff, p.n, rel_tol, budget).value;
      }

      diag.ok = true;
    } catch (const std::exception& e) {
      diag.ok = false;
      diag.error = e.what();
    }
  });

  fit_if_possible(scan, "delta_hat", [](const DeficitReport& r) { return r.delta_hat; });
  fit_if_possible(scan, "thm11_dist", [](const DeficitReport& r) { return r.thm11_dist; });
  fit_if_possible(scan, "asymmetry", [](const DeficitReport& r) { return r.asymmetry; });
  fit_if_possible(scan, "l1_dist_t1", [](const DeficitReport& r) { return r.l1_dist_t1; });
  fit_if_possible(scan, "l1_dist_2t", [](const DeficitReport& r) { return r.l1_dist_2t; });

  const StabilityExponents exps = stability_exponents(p);
  scan.verdicts["extremal_distance_ratio"] = ratio_verdict(
      scan, [](const DeficitReport& r) { return r.thm11_dist; },
      [](const DeficitReport& r) { return r.delta_hat; }, 1.0, "dist <= K delta_hat");
  scan.verdicts["asymmetry_power_ratio"] = ratio_verdict(
      scan,
      [&exps](const DeficitReport& r) { return std::pow(r.asymmetry, exps.cor_power); },
      [](const DeficitReport& r) { return r.delta_gns; }, 1.0,
      "asymmetry^cor_power <= C delta");
  scan.verdicts["density_t1_ratio"] = ratio_verdict(
      scan, [](const DeficitReport& r) { return r.l1_dist_t1; },
      [](const DeficitReport& r) { return r.delta_hat; },
      (p_moment - 1.0) / (2.0 * p_moment), "l1_t1 <= K delta_hat^((p-1)/2p)");
  scan.verdicts["density_2t_ratio"] = ratio_verdict(
      scan, [](const DeficitReport& r) { return r.l1_dist_2t; },
      [](const DeficitReport& r) { return r.delta_hat; }, 0.5, "l1_2t <= K delta_hat^(1/2)");

  {
    Verdict v;
    auto it_a = scan.fitted.find("asymmetry");
    auto it_d = scan.fitted.find("delta_hat");
    if (it_a != scan.fitted.end() && it_d != scan.fitted.end()) {
      const double probe = it_a->second.slope * exps.sharp_power;
      v.margin = probe - it_d->second.slope;
      v.pass = std::abs(v.margin) <= 0.25;
      v.note = "slope(asymmetry) * (1/t) vs slope(delta_hat)";
    } else {
      v.pass = true;
      v.margin = 0.0;
      v.note = "insufficient positive data for slope fits (equality family)";
    }
    scan.verdicts["exponent_consistency"] = v;
  }

  {
    Verdict v;
    v.pass = true;
    for (const auto& diag : scan.diagnostics)
      if (diag.ok && !diag.lift_identity_pass) v.pass = false;
    v.note = "lift identity at every scan point";
    scan.verdicts["lift_identity"] = v;
  }
  return scan;
}

ScanResult be_ratio_scan(const PerturbationFamily& family, const std::vector<double>& eps_grid,
                         const Params& p, double rel_tol, long budget, int threads) {
  ScanResult scan;
  scan.kind = "be";
  scan.family = family;
  scan.params = p;
  scan.rel_tol = rel_tol;
  scan.eps_grid = eps_grid;
  scan.reports.resize(eps_grid.size());
  scan.diagnostics.resize(eps_grid.size());

  const double g_norm_sq = extremal_gradient_norm_sq(p);
  const RecenteringConstants rc = recentering_constants(p);
  const int workers = resolve_thread_count(threads, static_cast<int>(eps_grid.size()));
  const double coarse_tol = std::max(rel_tol, 1e-5);

  run_parallel(static_cast<int>(eps_grid.size()), workers, [&](int i) {
    PointDiagnostics& diag = scan.diagnostics[i];
    try {
      RadialProfile raw = perturb(family, eps_grid[i], p);
      NormalizeResult norm = normalize(raw, p, rel_tol, budget);
      diag.norm_c = norm.c;
      diag.norm_lambda = norm.lambda;
      const RadialProfile& u = norm.profile;

      ProfileNorms norms = profile_norms(u, p, rel_tol, budget);
      Deficits defs = gns_deficits(norms, p);
      DeficitReport rep;
      rep.lq_norms[p.t + 1.0] = norms.norm_t1;
      rep.lq_norms[2.0 * p.t] = norms.norm_2t;
      rep.grad_l2_sq = norms.grad_sq;
      rep.delta_gns = defs.delta_gns;
      rep.delta_hat = defs.delta_hat;
      rep.moment_p = kNaN;
      rep.p_used = 0.0;

      // closed-form height for a given placement, then the direct distance
      auto best_c = [&](double a, double d) {
        return lift_gradient_pairing(u, p, a, d, coarse_tol, budget) / g_norm_sq;
      };
      auto objective = [&](double a, double d) {
        return lift_gradient_distance(u, p, best_c(a, d), a, d, coarse_tol, budget);
      };

      OptimizeResult opt = minimize_2d(
          [&](double za, double zd) { return objective(std::exp(za), std::abs(zd)); },
          {0.0, 0.05}, {0.2, 0.15}, 1e-2, 200);
      const double a_star = std::exp(opt.x_star[0]);
      double d_star = std::abs(opt.x_star[1]);
      if (d_star < 1e-6) d_star = 0.0;

      const double c_star = lift_gradient_pairing(u, p, a_star, d_star, rel_tol, budget) /
                            g_norm_sq;
      diag.c_star = c_star;
      diag.be_a_star = a_star;
      diag.be_d_star = d_star;
      diag.grad_dist = lift_gradient_distance(u, p, c_star, a_star, d_star, rel_tol, budget);
      diag.grad_dist_recentered =
          lift_gradient_distance(u, p, 1.0, 1.0, d_star, rel_tol, budget);
      diag.be_applicable = diag.grad_dist <= rc.delta_0;

      scan.reports[i] = rep;
      diag.ok = true;
    } catch (const std::exception& e) {
      diag.ok = false;
      diag.error = e.what();
    }
  });

  // per-point deficit-to-distance ratios; the empirical constant is the
  // largest distance/deficit over the grid
  double min_ratio = std::numeric_limits<double>::infinity();
  double max_ratio = 0.0;
  double worst_recenter = 0.0;
  int used = 0, applicable = 0;
  bool recenter_ok = true;
  for (size_t i = 0; i < scan.reports.size(); ++i) {
    const PointDiagnostics& diag = scan.diagnostics[i];
    if (!diag.ok) continue;
    const double dh = scan.reports[i].delta_hat;
    if (dh > kDeficitFloor && diag.grad_dist > kDeficitFloor) {
      const double ratio = dh / diag.grad_dist;
      min_ratio = std::min(min_ratio, ratio);
      max_ratio = std::max(max_ratio, ratio);
      ++used;
    }
    const double floor = 100.0 * rel_tol * (1.0 + scan.reports[i].grad_l2_sq);
    const double bound = rc.c_0 * diag.grad_dist + floor;
    worst_recenter = std::max(worst_recenter, diag.grad_dist_recentered / bound);
    if (diag.grad_dist_recentered > bound) recenter_ok = false;
    if (diag.be_applicable) ++applicable;
  }

  {
    Verdict v;
    if (used == 0) {
      v.pass = true;
      v.note = "equality family: gradient distance at noise floor, ratio indeterminate";
      v.margin = 0.0;
    } else {
      v.pass = std::isfinite(min_ratio) && min_ratio > 0.0;
      v.margin = 1.0 / min_ratio; // empirical constant: sup dist / delta_hat
      v.note = "empirical C with C * delta_hat >= gradient distance; spread " +
               std::to_string(max_ratio / min_ratio);
    }
    scan.verdicts["be_ratio"] = v;
  }
  {
    Verdict v;
    v.pass = recenter_ok;
    v.margin = worst_recenter;
    v.note = "recentered distance <= C0 * best distance (+noise); " +
             std::to_string(applicable) + " point(s) below delta_0";
    scan.verdicts["recentering_bound"] = v;
  }

  std::vector<double> xs, ys;
  for (size_t i = 0; i < scan.reports.size(); ++i)
    if (scan.diagnostics[i].ok && scan.diagnostics[i].grad_dist > 1e-30) {
      xs.push_back(scan.eps_grid[i]);
      ys.push_back(scan.diagnostics[i].grad_dist);
    }
  if (xs.size() >= 3) scan.fitted["grad_dist"] = fit_exponent(xs, ys);
  fit_if_possible(scan, "delta_hat", [](const DeficitReport& r) { return r.delta_hat; });
  return scan;
}

} // namespace gnslab
