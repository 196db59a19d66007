#ifndef ANYONLAB_ENERGY_FUNCTIONALS_HPP
#define ANYONLAB_ENERGY_FUNCTIONALS_HPP

#include "anyonlab/tonks_girardeau.hpp"

namespace anyonlab {

// Gauge-dressed trial state psi(x1..xN) U_eps(y1..yN) e^{-i alpha S}.
struct TrialState2D {
  TGEigenstate psi;
  double alpha = 1.0;
  double epsilon = 1.0;
  int n_particles() const { return psi.n_particles; }
};

// E2D of the trial state by 4D tensor quadrature (N = 2).  The integrand is
// assembled in expanded gauge form: the cross terms carry the explicit
// difference grad S - A, so the alpha-cancellation is an output of the
// computation, not an input.  Distinct 1D node sets (order, order+1) keep
// tensor nodes off the x-diagonals.
double energy2d_trial(const TrialState2D& t, int order);

// E1D of a TG state by tensor quadrature (delegates to tg_energy_quadrature).
double energy1d(const TGEigenstate& psi, int order);

// C_alpha = 2 min_{q in Z} |alpha - 2q|^2, alpha in (0, 2).
double c_alpha(double alpha);

// Many-anyon Hardy constant 2 C_alpha / ((N-1)(2 + 3(N-2) C_alpha)).
double many_anyon_hardy_constant(int n_particles, double alpha);

// min_{q in Z} (alpha - 2q)^2 by direct integer minimization.
double min_even_shift_sq(double alpha);

}  // namespace anyonlab

#endif
