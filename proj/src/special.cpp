#include "gnslab/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gnslab {

namespace {

// Lanczos coefficients for g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kG = 7.0;

double lanczos_series(double x) {
  // x >= 0.5 assumed; series argument is z = x - 1.
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x - 1.0 + i);
  return a;
}

} // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  if (x < 0.5) {
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
  }
  const double t = x + kG - 0.5;
  const double a = lanczos_series(x);
  return 0.5 * std::log(2.0 * std::numbers::pi) + (x - 0.5) * std::log(t) - t + std::log(a);
}

double gamma_fn(double x) {
  if (x <= 0.0 && x == std::floor(x))
    throw std::domain_error("gamma_fn: pole at non-positive integer");
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_fn(1.0 - x));
  }
  if (x > 170.0) return std::exp(log_gamma(x)); // direct product would overflow
  const double t = x + kG - 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x - 0.5) * std::exp(-t) *
         lanczos_series(x);
}

double unit_ball_volume(int n) {
  if (n < 0) throw std::domain_error("unit_ball_volume: n must be >= 0");
  return std::pow(std::numbers::pi, 0.5 * n) / gamma_fn(1.0 + 0.5 * n);
}

double surface_measure(int m) {
  if (m < 0) throw std::domain_error("surface_measure: m must be >= 0");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * (m + 1)) / gamma_fn(0.5 * (m + 1));
}

} // namespace gnslab
