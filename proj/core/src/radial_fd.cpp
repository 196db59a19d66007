#include "anyonlab/radial_fd.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace anyonlab {

std::vector<double> radial_fd_eigenvalues(const RadialFDProblem& p, int k) {
  const int n = p.grid_points;
  if (n < 16) throw std::invalid_argument("radial_fd: grid too coarse");
  if (k < 1 || k > n) throw std::invalid_argument("radial_fd: bad k");
  const double h = p.r_max / n;

  // Cell-centered nodes r_i = (i + 1/2) h; conservative fluxes with weight
  // r^c evaluated at the cell faces; similarity-scaled to symmetric
  // tridiagonal form.
  Eigen::VectorXd diag(n), sub(n - 1);
  auto face = [&](int i) { return std::pow(i * h, p.c); };  // face at r = i*h
  for (int i = 0; i < n; ++i) {
    const double r = (i + 0.5) * h;
    const double w = std::pow(r, p.c);
    const double wl = face(i);          // 0 at i = 0: Neumann closure
    const double wr = face(i + 1);      // Dirichlet beyond the last cell
    diag[i] = (wl + wr) / (w * h * h) + p.potential(r);
    if (i + 1 < n) {
      const double wnext = std::pow((i + 1.5) * h, p.c);
      sub[i] = -wr / (h * h * std::sqrt(w * wnext));
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("radial_fd: eigensolve failed");
  std::vector<double> out(k);
  for (int i = 0; i < k; ++i) out[i] = es.eigenvalues()[i];
  return out;
}

std::vector<double> radial_fd_eigenvalues_richardson(const RadialFDProblem& p, int k) {
  auto coarse = radial_fd_eigenvalues(p, k);
  RadialFDProblem fine = p;
  fine.grid_points = 2 * p.grid_points;
  auto fine_vals = radial_fd_eigenvalues(fine, k);
  std::vector<double> out(k);
  for (int i = 0; i < k; ++i) out[i] = (4.0 * fine_vals[i] - coarse[i]) / 3.0;
  return out;
}

std::vector<double> ab_radial_oracle(double nu, double omega, int k, double r_max,
                                     int grid_points) {
  if (nu < 0.0 || !(omega > 0.0)) throw std::invalid_argument("ab_radial_oracle");
  if (r_max <= 0.0) {
    const double e_top = omega * (2.0 * k + nu + 3.0);
    r_max = 2.0 * std::sqrt(e_top / omega) + 10.0 / std::sqrt(omega);
  }
  RadialFDProblem p;
  p.c = 2.0 * nu + 1.0;
  p.potential = [omega](double r) { return 0.25 * omega * omega * r * r; };
  p.r_max = r_max;
  p.grid_points = grid_points;
  return radial_fd_eigenvalues_richardson(p, k);
}

}  // namespace anyonlab
