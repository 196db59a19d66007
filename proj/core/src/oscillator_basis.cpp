#include "anyonlab/oscillator_basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anyonlab {

namespace {

constexpr double kQuarterRootPi = 0.75112554446494248;  // pi^(-1/4)
// exp(-x^2/2) underflows past here; basis values are exact 0 beyond it.
constexpr double kUnderflowX2 = 1416.0;

double laguerre(int n, double nu, double t) {
  // Standard three-term recurrence for L_n^nu(t).
  if (n == 0) return 1.0;
  double lm1 = 1.0;
  double l = 1.0 + nu - t;
  for (int k = 1; k < n; ++k) {
    const double lp1 = ((2.0 * k + 1.0 + nu - t) * l - (k + nu) * lm1) / (k + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

}  // namespace

double hermite_eval(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite_eval: n >= 0");
  if (!std::isfinite(x)) throw std::invalid_argument("hermite_eval: x finite");
  if (x * x > kUnderflowX2) return 0.0;
  double hm1 = 0.0;
  double h = kQuarterRootPi * std::exp(-0.5 * x * x);
  for (int k = 0; k < n; ++k) {
    const double hp1 =
        x * std::sqrt(2.0 / (k + 1.0)) * h - std::sqrt(k / (k + 1.0)) * hm1;
    hm1 = h;
    h = hp1;
  }
  return h;
}

void hermite_eval_all(int nmax, double x, std::span<double> out) {
  if (nmax < 0 || out.size() < static_cast<std::size_t>(nmax) + 1)
    throw std::invalid_argument("hermite_eval_all: bad arguments");
  if (x * x > kUnderflowX2) {
    for (int k = 0; k <= nmax; ++k) out[k] = 0.0;
    return;
  }
  out[0] = kQuarterRootPi * std::exp(-0.5 * x * x);
  if (nmax == 0) return;
  out[1] = x * std::sqrt(2.0) * out[0];
  for (int k = 1; k < nmax; ++k)
    out[k + 1] =
        x * std::sqrt(2.0 / (k + 1.0)) * out[k] - std::sqrt(k / (k + 1.0)) * out[k - 1];
}

double hermite_deriv(int n, double x) {
  const double lower = (n > 0) ? std::sqrt(2.0 * n) * hermite_eval(n - 1, x) : 0.0;
  return lower - x * hermite_eval(n, x);
}

double oscillator_energy(int n) {
  if (n < 0) throw std::invalid_argument("oscillator_energy: n >= 0");
  return 2.0 * n + 1.0;
}

double uepsilon_eval(double eps, double y) {
  if (!(eps > 0.0)) throw std::invalid_argument("uepsilon_eval: eps > 0");
  return std::pow(std::numbers::pi * eps, -0.25) * std::exp(-y * y / (2.0 * eps));
}

ABBasisIndex ABBasisIndex::make(int n, int m, double alpha) {
  if (n < 0) throw std::invalid_argument("ABBasisIndex: n >= 0");
  if (m % 2 != 0) throw std::invalid_argument("ABBasisIndex: m must be even");
  return ABBasisIndex{n, m, std::abs(m + alpha)};
}

double ab_radial_eval(int n, double nu, double omega, double r) {
  if (n < 0 || nu < 0.0 || !(omega > 0.0) || r < 0.0)
    throw std::invalid_argument("ab_radial_eval: bad arguments");
  const double t = 0.5 * omega * r * r;
  if (r == 0.0) return (nu > 0.0) ? 0.0 : std::sqrt(omega);  // L_n(0) = 1
  // log-scaled prefactor to avoid factorial overflow at large n or nu
  const double log_norm =
      0.5 * (std::log(omega) + std::lgamma(n + 1.0) - std::lgamma(n + nu + 1.0));
  const double log_env = 0.5 * nu * std::log(t) - 0.5 * t;
  if (log_norm + log_env < -707.0) return 0.0;
  return std::exp(log_norm + log_env) * laguerre(n, nu, t);
}

double ab_radial_deriv(int n, double nu, double omega, double r) {
  if (r <= 0.0) throw std::invalid_argument("ab_radial_deriv: r > 0 required");
  const double t = 0.5 * omega * r * r;
  const double R = ab_radial_eval(n, nu, omega, r);
  // dR/dt = (nu/(2t) - 1/2) R + prefactor * t^{nu/2} e^{-t/2} dL/dt,
  // dL_n^nu/dt = -L_{n-1}^{nu+1}(t).
  double dl_part = 0.0;
  if (n > 0) {
    const double log_norm =
        0.5 * (std::log(omega) + std::lgamma(n + 1.0) - std::lgamma(n + nu + 1.0));
    const double log_env = 0.5 * nu * std::log(t) - 0.5 * t;
    if (log_norm + log_env > -707.0)
      dl_part = -std::exp(log_norm + log_env) * laguerre(n - 1, nu + 1.0, t);
  }
  const double dRdt = (0.5 * nu / t - 0.5) * R + dl_part;
  return dRdt * omega * r;
}

}  // namespace anyonlab
