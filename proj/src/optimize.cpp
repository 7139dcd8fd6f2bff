#include "gnslab/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gnslab {

OptimizeResult minimize_scalar(const std::function<double(double)>& f, double lo, double hi,
                               double x_tol, int max_iter) {
  if (!(lo < hi)) throw std::invalid_argument("minimize_scalar: need lo < hi");
  if (!(x_tol > 0.0)) throw std::invalid_argument("minimize_scalar: x_tol must be > 0");

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);

  OptimizeResult res;
  int it = 0;
  while (b - a > x_tol && it < max_iter) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
    ++it;
  }
  const double x = fc < fd ? c : d;
  res.x_star = {x};
  res.f_star = std::min(fc, fd);
  res.iterations = it;
  res.converged = b - a <= x_tol;
  return res;
}

namespace {

double simplex_diameter(const std::vector<std::vector<double>>& pts) {
  double diam = 0.0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      double d2 = 0.0;
      for (size_t k = 0; k < pts[i].size(); ++k) {
        const double dk = pts[i][k] - pts[j][k];
        d2 += dk * dk;
      }
      diam = std::max(diam, std::sqrt(d2));
    }
  return diam;
}

OptimizeResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                           const std::vector<double>& x0, const std::vector<double>& scale,
                           double x_tol, int max_iter) {
  const size_t dim = x0.size();
  std::vector<std::vector<double>> pts(dim + 1, x0);
  for (size_t i = 0; i < dim; ++i) pts[i + 1][i] += scale[i];
  std::vector<double> fv(dim + 1);
  for (size_t i = 0; i <= dim; ++i) fv[i] = f(pts[i]);

  int it = 0;
  auto order = [&] {
    std::vector<size_t> idx(dim + 1);
    for (size_t i = 0; i <= dim; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> np(dim + 1);
    std::vector<double> nf(dim + 1);
    for (size_t i = 0; i <= dim; ++i) {
      np[i] = pts[idx[i]];
      nf[i] = fv[idx[i]];
    }
    pts.swap(np);
    fv.swap(nf);
  };

  order();
  while (it < max_iter && simplex_diameter(pts) > x_tol) {
    ++it;
    std::vector<double> centroid(dim, 0.0);
    for (size_t i = 0; i < dim; ++i) {
      for (size_t k = 0; k < dim; ++k) centroid[k] += pts[i][k];
    }
    for (size_t k = 0; k < dim; ++k) centroid[k] /= static_cast<double>(dim);

    auto blend = [&](double coef) {
      std::vector<double> x(dim);
      for (size_t k = 0; k < dim; ++k)
        x[k] = centroid[k] + coef * (centroid[k] - pts[dim][k]);
      return x;
    };

    std::vector<double> xr = blend(1.0);
    const double fr = f(xr);
    if (fr < fv[0]) {
      std::vector<double> xe = blend(2.0);
      const double fe = f(xe);
      if (fe < fr) {
        pts[dim] = xe;
        fv[dim] = fe;
      } else {
        pts[dim] = xr;
        fv[dim] = fr;
      }
    } else if (fr < fv[dim - 1]) {
      pts[dim] = xr;
      fv[dim] = fr;
    } else {
      std::vector<double> xc = blend(fr < fv[dim] ? 0.5 : -0.5);
      const double fcon = f(xc);
      if (fcon < std::min(fr, fv[dim])) {
        pts[dim] = xc;
        fv[dim] = fcon;
      } else {
        // shrink toward the best vertex
        for (size_t i = 1; i <= dim; ++i) {
          for (size_t k = 0; k < dim; ++k) pts[i][k] = pts[0][k] + 0.5 * (pts[i][k] - pts[0][k]);
          fv[i] = f(pts[i]);
        }
      }
    }
    order();
  }

  OptimizeResult res;
  res.x_star = pts[0];
  res.f_star = fv[0];
  res.iterations = it;
  res.converged = simplex_diameter(pts) <= x_tol;
  return res;
}

} // namespace

OptimizeResult minimize_simplex(const std::function<double(const std::vector<double>&)>& f,
                                const std::vector<double>& x0,
                                const std::vector<double>& scale, double x_tol,
                                int max_iter) {
  if (x0.empty() || x0.size() != scale.size())
    throw std::invalid_argument("minimize_simplex: inconsistent dimensions");
  if (!(x_tol > 0.0)) throw std::invalid_argument("minimize_simplex: x_tol must be > 0");

  OptimizeResult first = nelder_mead(f, x0, scale, x_tol, max_iter);
  std::vector<double> half(scale.size());
  for (size_t i = 0; i < scale.size(); ++i) half[i] = 0.5 * scale[i];
  OptimizeResult second = nelder_mead(f, first.x_star, half, x_tol, max_iter);
  second.iterations += first.iterations;
  if (second.f_star > first.f_star) {
    second.x_star = first.x_star;
    second.f_star = first.f_star;
  }
  return second;
}

OptimizeResult minimize_2d(const std::function<double(double, double)>& f,
                           const std::vector<double>& x0, const std::vector<double>& scale,
                           double x_tol, int max_iter) {
  if (x0.size() != 2 || scale.size() != 2)
    throw std::invalid_argument("minimize_2d: expects two coordinates");
  auto wrapped = [&f](const std::vector<double>& x) { return f(x[0], x[1]); };
  return minimize_simplex(wrapped, x0, scale, x_tol, max_iter);
}

} // namespace gnslab
