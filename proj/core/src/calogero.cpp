#include "anyonlab/calogero.hpp"

#include "anyonlab/radial_fd.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace anyonlab {

double calogero_relative_level(double alpha, int n) {
  if (!(alpha > 0.0) || n < 0) throw std::invalid_argument("calogero_relative_level");
  return 2.0 * (2.0 * n + 1.0 + std::sqrt(alpha * alpha + 0.25));
}

std::vector<double> calogero_relative_oracle(double alpha, int k, double r_max,
                                             int grid_points) {
  if (!(alpha > 0.0) || k < 1) throw std::invalid_argument("calogero_relative_oracle");
  // 2[-d^2 + alpha^2/r^2 + r^2/4]: factor r^{nu + 1/2} out of the half-line
  // form (-u'' + (nu^2 - 1/4)/r^2 u), leaving the Bessel-type operator with
  // weight exponent c = 2 nu + 1, nu = sqrt(alpha^2 + 1/4).
  const double nu = std::sqrt(alpha * alpha + 0.25);
  RadialFDProblem p;
  p.c = 2.0 * nu + 1.0;
  p.potential = [](double r) { return 0.25 * r * r; };
  p.r_max = r_max;
  p.grid_points = grid_points;
  auto vals = radial_fd_eigenvalues_richardson(p, k);
  for (double& v : vals) v *= 2.0;
  return vals;
}

std::vector<double> calogero_n2_levels(const CalogeroParams& params, int k) {
  if (k < 1) throw std::invalid_argument("calogero_n2_levels: k >= 1");
  // k smallest sums of CM level (2p+1) and relative level; both towers have
  // spacing independent of the index so a bounded direct enumeration works.
  std::vector<double> sums;
  for (int p = 0; 2 * p + 1 <= 4 * k + 1; ++p)
    for (int n = 0; n <= k; ++n)
      sums.push_back(2.0 * p + 1.0 + calogero_relative_level(params.alpha, n));
  std::sort(sums.begin(), sums.end());
  sums.resize(k);
  return sums;
}

double calogero_vs_tg_gap(double alpha) {
  return calogero_n2_levels(CalogeroParams{alpha}, 1)[0] - 4.0;
}

}  // namespace anyonlab
