#include "gnslab/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "gnslab/special.hpp"

namespace gnslab {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1]. Gauss points sit at the
// odd Kronrod indices.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelEstimate {
  double value;
  double error;
};

// QUADPACK-style qk15 on [a, b] with the usual rescaled error estimate.
PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);

  double fv[15];
  fv[7] = f(center);
  for (int j = 0; j < 7; ++j) {
    const double dx = hlgth * kXgk[j];
    fv[j] = f(center - dx);
    fv[14 - j] = f(center + dx);
  }

  double resg = kWg[3] * fv[7];
  double resk = kWgk[7] * fv[7];
  double resabs = kWgk[7] * std::abs(fv[7]);
  for (int j = 0; j < 7; ++j) {
    resk += kWgk[j] * (fv[j] + fv[14 - j]);
    resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
  }
  for (int j = 0; j < 3; ++j) resg += kWg[j] * (fv[2 * j + 1] + fv[13 - 2 * j]);

  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fv[7] - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(fv[j] - reskh) + std::abs(fv[14 - j] - reskh));

  const double value = resk * hlgth;
  resabs *= std::abs(hlgth);
  resasc *= std::abs(hlgth);

  double err = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  err = std::max(err, 50.0 * eps * resabs);
  return {value, err};
}

struct Panel {
  double a, b;
  double value, error;
  long id; // insertion order; deterministic tie-break
};

struct PanelWorse {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.id > y.id;
  }
};

void check_rel_tol(double rel_tol) {
  if (!(rel_tol >= 1e-14 && rel_tol <= 1e-2))
    throw std::invalid_argument("quad: rel_tol must lie in [1e-14, 1e-2]");
}

// Globally adaptive refinement over a list of seed intervals of one mapped
// integrand. Deterministic: the worst panel (ties broken by insertion order)
// is bisected until the summed error estimate meets the tolerance.
QuadResult adapt(const std::function<double(double)>& f, const std::vector<double>& seeds,
                 double rel_tol, long budget) {
  check_rel_tol(rel_tol);
  if (budget < 15) throw std::invalid_argument("quad: budget too small");

  std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap;
  long evals = 0;
  long next_id = 0;
  double total = 0.0, toterr = 0.0;

  auto push = [&](double a, double b) {
    PanelEstimate e = gk15(f, a, b);
    evals += 15;
    heap.push(Panel{a, b, e.value, e.error, next_id++});
    total += e.value;
    toterr += e.error;
  };

  for (size_t i = 0; i + 1 < seeds.size(); ++i) push(seeds[i], seeds[i + 1]);

  const double eps = std::numeric_limits<double>::epsilon();
  while (true) {
    const double target = std::max(rel_tol * std::abs(total), 1e-300);
    if (toterr <= target) break;
    Panel worst = heap.top();
    const double width = worst.b - worst.a;
    if (width <= 64.0 * eps * std::max(std::abs(worst.a), std::abs(worst.b)) ||
        width < 1e-300) {
      break; // refinement floor; accept the current estimate
    }
    if (evals + 30 > budget)
      throw quad_error("quad: evaluation budget exhausted before convergence");
    heap.pop();
    total -= worst.value;
    toterr -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    push(worst.a, mid);
    push(mid, worst.b);
  }

  return {total, toterr, evals};
}

// Exponent for the substitution r = w^m on (0, 1): makes the transformed
// integrand vanish to a comfortable order at w = 0.
double zero_map_power(const Integrand1D& f) {
  if (!f.singular_at_zero) return 1.0;
  if (!(f.zero_exponent > -1.0))
    throw std::invalid_argument("quad: zero_exponent must be > -1");
  double m = std::ceil(4.0 / (f.zero_exponent + 1.0));
  return std::clamp(m, 1.0, 8.0);
}

// Exponent for the substitution r = w^-k mapping (1, inf) onto (0, 1).
double tail_map_power(double beta) {
  if (!(beta > 1.0)) throw std::invalid_argument("quad: tail_exponent must be > 1");
  return std::clamp(4.0 / (beta - 1.0), 1.0, 12.0);
}

} // namespace

QuadResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                              double rel_tol, long budget) {
  if (!(a < b)) throw std::invalid_argument("integrate_interval: need a < b");
  return adapt(f, {a, 0.5 * (a + b), b}, rel_tol, budget);
}

QuadResult integrate_semi_infinite(const Integrand1D& f, double rel_tol, long budget) {
  if (!f.eval) throw std::invalid_argument("integrate_semi_infinite: empty integrand");
  const double m = zero_map_power(f);
  const double k = tail_map_power(f.tail_exponent);

  // (0,1): r = w^m.  (1,inf): r = w^{-k}.
  auto near_part = [m, &f](double w) {
    return f.eval(std::pow(w, m)) * m * std::pow(w, m - 1.0);
  };
  auto far_part = [k, &f](double w) {
    return f.eval(std::pow(w, -k)) * k * std::pow(w, -k - 1.0);
  };

  QuadResult near_res = adapt(near_part, {0.0, 0.5, 1.0}, rel_tol * 0.5, budget);
  const long remaining = budget - near_res.evaluations;
  if (remaining < 60) throw quad_error("quad: evaluation budget exhausted before convergence");
  QuadResult far_res = adapt(far_part, {0.0, 0.25, 0.5, 1.0}, rel_tol * 0.5, remaining);
  return {near_res.value + far_res.value,
          near_res.abs_error_estimate + far_res.abs_error_estimate,
          near_res.evaluations + far_res.evaluations};
}

QuadResult integrate_radial(const Integrand1D& f, int n, double rel_tol, long budget) {
  if (n < 1) throw std::invalid_argument("integrate_radial: n must be >= 1");
  const double shell = n * unit_ball_volume(n);
  Integrand1D g;
  g.eval = [&f, n](double r) { return f.eval(r) * std::pow(r, n - 1); };
  g.tail_exponent = f.tail_exponent - (n - 1);
  g.singular_at_zero = f.singular_at_zero;
  g.zero_exponent = f.zero_exponent + (n - 1);
  if (!(g.tail_exponent > 1.0))
    throw std::invalid_argument("integrate_radial: integrand decays too slowly");
  QuadResult res = integrate_semi_infinite(g, rel_tol, budget);
  res.value *= shell;
  res.abs_error_estimate *= shell;
  return res;
}

QuadResult integrate_bipolar(const std::function<double(double, double, double)>& kernel,
                             double d, int n, double tail_exponent, double rel_tol,
                             long budget) {
  if (n < 2) throw std::invalid_argument("integrate_bipolar: n must be >= 2");
  if (d < 0.0) throw std::invalid_argument("integrate_bipolar: d must be >= 0");

  const double ring = surface_measure(n - 2);
  const double pi = 3.14159265358979323846;
  long inner_evals = 0;

  // inner integral over the polar angle for fixed r
  auto angular = [&](double r, double tol, long inner_budget) {
    auto g = [&](double phi) {
      const double sh = std::sin(0.5 * phi);
      const double rho2 = (r - d) * (r - d) + 4.0 * r * d * sh * sh;
      const double rho = std::sqrt(std::max(rho2, 0.0));
      const double mu = std::cos(phi);
      double w = 1.0;
      if (n == 3) {
        w = std::sin(phi);
      } else if (n > 3) {
        w = std::pow(std::sin(phi), n - 2);
      }
      return kernel(r, rho, mu) * w;
    };
    QuadResult res = adapt(g, {0.0, 0.5 * pi, pi}, tol, inner_budget);
    inner_evals += res.evaluations;
    return res.value;
  };

  Integrand1D outer;
  outer.eval = [&](double r) {
    const long room = budget - inner_evals;
    if (room < 3000)
      throw quad_error("quad: evaluation budget exhausted before convergence");
    return angular(r, rel_tol * 0.25, room) * std::pow(r, n - 1);
  };
  outer.tail_exponent = tail_exponent - (n - 1);
  outer.singular_at_zero = n > 1;
  outer.zero_exponent = n - 1.0;
  if (!(outer.tail_exponent > 1.0))
    throw std::invalid_argument("integrate_bipolar: kernel decays too slowly");

  QuadResult res = integrate_semi_infinite(outer, rel_tol, budget);
  res.value *= ring;
  res.abs_error_estimate *= ring;
  res.abs_error_estimate += 0.5 * rel_tol * std::abs(res.value); // inner-tolerance share
  res.evaluations += inner_evals;
  return res;
}

QuadResult integrate_two_center(const Integrand1D& F, const Integrand1D& G, double d, int n,
                                double rel_tol, long budget) {
  if (n < 2) throw std::invalid_argument("integrate_two_center: n must be >= 2");
  if (d < 0.0) throw std::invalid_argument("integrate_two_center: d must be >= 0");
  const double joint_tail = F.tail_exponent + G.tail_exponent;
  if (!(joint_tail > n))
    throw std::invalid_argument("integrate_two_center: product decays too slowly");

  if (d == 0.0) {
    Integrand1D prod;
    prod.eval = [&F, &G](double r) { return F.eval(r) * G.eval(r); };
    prod.tail_exponent = joint_tail;
    prod.singular_at_zero = F.singular_at_zero || G.singular_at_zero;
    prod.zero_exponent = (F.singular_at_zero ? F.zero_exponent : 0.0) +
                         (G.singular_at_zero ? G.zero_exponent : 0.0);
    return integrate_radial(prod, n, rel_tol, budget);
  }

  // Averaging the two orderings makes the result exactly symmetric in (F, G).
  auto fg = [&](double r, double rho, double) { return F.eval(r) * G.eval(rho); };
  auto gf = [&](double r, double rho, double) { return G.eval(r) * F.eval(rho); };
  QuadResult a = integrate_bipolar(fg, d, n, joint_tail, rel_tol, budget / 2);
  QuadResult b = integrate_bipolar(gf, d, n, joint_tail, rel_tol, budget / 2);
  return {0.5 * (a.value + b.value),
          0.5 * (a.abs_error_estimate + b.abs_error_estimate),
          a.evaluations + b.evaluations};
}

QuadResult integrate_halfspace_weighted(const std::function<double(double, double)>& h,
                                        double s, int n, double tail_r, double tail_y,
                                        double rel_tol, long budget) {
  if (n < 1) throw std::invalid_argument("integrate_halfspace_weighted: n must be >= 1");
  if (!(s > -1.0)) throw std::invalid_argument("integrate_halfspace_weighted: need s > -1");
  if (!(tail_y - s > 1.0))
    throw std::invalid_argument("integrate_halfspace_weighted: y-decay too slow");

  const double shell = n * unit_ball_volume(n);
  long inner_evals = 0;

  auto slice = [&](double r, double tol, long inner_budget) {
    Integrand1D g;
    g.eval = [&h, s, r](double y) { return h(r, y) * std::pow(y, s); };
    g.tail_exponent = tail_y - s;
    g.singular_at_zero = true;
    g.zero_exponent = s;
    QuadResult res = integrate_semi_infinite(g, tol, inner_budget);
    inner_evals += res.evaluations;
    return res.value;
  };

  Integrand1D outer;
  outer.eval = [&](double r) {
    const long room = budget - inner_evals;
    if (room < 3000)
      throw quad_error("quad: evaluation budget exhausted before convergence");
    return slice(r, rel_tol * 0.25, room) * std::pow(r, n - 1);
  };
  outer.tail_exponent = tail_r - (n - 1);
  outer.singular_at_zero = n > 1;
  outer.zero_exponent = n - 1.0;
  if (!(outer.tail_exponent > 1.0))
    throw std::invalid_argument("integrate_halfspace_weighted: r-decay too slow");

  QuadResult res = integrate_semi_infinite(outer, rel_tol, budget);
  res.value *= shell;
  res.abs_error_estimate *= shell;
  res.abs_error_estimate += 0.5 * rel_tol * std::abs(res.value);
  res.evaluations += inner_evals;
  return res;
}

} // namespace gnslab
