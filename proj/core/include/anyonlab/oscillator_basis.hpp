#ifndef ANYONLAB_OSCILLATOR_BASIS_HPP
#define ANYONLAB_OSCILLATOR_BASIS_HPP

#include <span>

namespace anyonlab {

// Energy convention used throughout: the 1D one-body operator is
// -d^2/dx^2 + x^2 with levels 2n+1.

// L2-normalized eigenfunction h_n of -d^2/dx^2 + x^2, by the normalized
// three-term recurrence.  Returns exact 0 once the Gaussian underflows,
// so overlap integrals stay deterministic.
double hermite_eval(int n, double x);

// h_0 .. h_nmax at a single point (shared recurrence pass).
void hermite_eval_all(int nmax, double x, std::span<double> out);

// h_n'(x) = sqrt(2n) h_{n-1}(x) - x h_n(x).
double hermite_deriv(int n, double x);

double oscillator_energy(int n);  // 2n + 1

// Ground state of -d^2/dy^2 + y^2/eps^2:
//   u_eps(y) = (sqrt(pi*eps))^(-1/2) exp(-y^2/(2*eps)),  eigenvalue 1/eps.
double uepsilon_eval(double eps, double y);

// Radial eigenfunctions of the isotropic Aharonov-Bohm oscillator
//   -r^{-1} d/dr (r d/dr) + nu^2/r^2 + omega^2 r^2 / 4
// with eigenvalue omega*(2n + nu + 1), orthonormal under int R R' r dr:
//   R_{n,nu}(r) = sqrt(omega n! / Gamma(n+nu+1)) t^{nu/2} e^{-t/2} L_n^nu(t),
//   t = omega r^2 / 2.
struct ABBasisIndex {
  int n;       // radial nodes, n >= 0
  int m;       // even relative angular momentum
  double nu;   // |m + alpha| >= 0

  static ABBasisIndex make(int n, int m, double alpha);
};

double ab_radial_eval(int n, double nu, double omega, double r);

// d/dr of R_{n,nu} (used by finite-check tests and the H1 diagnostics).
double ab_radial_deriv(int n, double nu, double omega, double r);

}  // namespace anyonlab

#endif
