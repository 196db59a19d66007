#ifndef ANYONLAB_HARDY_HPP
#define ANYONLAB_HARDY_HPP

#include <cstdint>
#include <vector>

namespace anyonlab {

// Smooth symmetric trial function on R^{2N}:
//   phi = prod_{j<l} |x_j - x_l|^{2 jastrow} * exp(-sum |x_j|^2/(2 width^2)),
// vanishing on the diagonals so the magnetic kinetic terms stay finite.
struct HardyTrial {
  int n_particles = 2;   // 2 or 3
  double alpha = 1.0;
  double width = 1.0;
  int jastrow = 1;       // pair factor |x_j - x_l|^{2*jastrow}
};

struct McResult {
  double estimate = 0.0;
  double stderr_est = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  bool flagged = false;  // stderr exceeds 10% of the estimate
};

// Monte Carlo estimate of
//   (sum_k int |D_k phi|^2) / (sum_{j<l} int |phi|^2/|x_j-x_l|^2)
// with antithetic importance sampling from the Gaussian envelope.
// By Theorem-style lower bounds the quotient dominates
// many_anyon_hardy_constant(N, alpha).
McResult hardy_quotient_mc(const HardyTrial& t, std::size_t samples,
                           std::uint64_t seed);

// Non-magnetic three-particle check: for a symmetric Gaussian,
//   sum int |grad phi|^2 / int |phi|^2 / rho^2 >= 3,
// rho^2 = |x1-x2|^2 + |x1-x3|^2 + |x2-x3|^2.
McResult three_particle_hardy_mc(double width, std::size_t samples,
                                 std::uint64_t seed);

// Closed-form angular-channel quotient for phi = f(r) e^{im theta} in the
// two-anyon relative channel: (m+alpha)^2 * int f^2/r dr / int f^2/r dr = ...
// evaluated by radial quadrature; returns the quotient for a Gaussian f.
double two_anyon_channel_quotient(int m, double alpha, int quad_order = 64);

}  // namespace anyonlab

#endif
