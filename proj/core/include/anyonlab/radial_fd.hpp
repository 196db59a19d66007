#ifndef ANYONLAB_RADIAL_FD_HPP
#define ANYONLAB_RADIAL_FD_HPP

#include <functional>
#include <vector>

namespace anyonlab {

// Dense finite-difference oracle for half-line radial operators of the form
//   L u = -u'' - (c/r) u' + W(r) u        on (0, R), weight r^c dr,
// which is the Bessel-type operator left after factoring the known r^s
// boundary behavior out of a singular radial problem.  Conservative
// second-order discretization on a cell-centered uniform grid (no node at
// r = 0, natural Neumann closure there), Dirichlet at r = R.
//
// Used as an independent check on spectral results; kept free of any
// Galerkin machinery.
struct RadialFDProblem {
  double c = 0.0;                         // weight exponent, c = 2s in r^{2s}
  std::function<double(double)> potential;  // W(r)
  double r_max = 12.0;
  int grid_points = 2000;
};

std::vector<double> radial_fd_eigenvalues(const RadialFDProblem& p, int k);

// Two-grid Richardson extrapolation (h and h/2), error O(h^4).
std::vector<double> radial_fd_eigenvalues_richardson(const RadialFDProblem& p, int k);

// Eigenvalues of  -r^{-1}(r u')' + nu^2/r^2 + omega^2 r^2/4  (the isotropic
// Aharonov-Bohm oscillator radial problem) via the substitution
// u = r^nu g, i.e. c = 2 nu + 1 and W = omega^2 r^2 / 4.
std::vector<double> ab_radial_oracle(double nu, double omega, int k,
                                     double r_max = 0.0, int grid_points = 3000);

}  // namespace anyonlab

#endif
