#ifndef ANYONLAB_CALOGERO_HPP
#define ANYONLAB_CALOGERO_HPP

#include <vector>

namespace anyonlab {

// Competing 1D limit model at N = 2: harmonic trap plus an inverse-square
// pair interaction of strength 2*alpha^2.  The decaying boundary class
// r^{nu + 1/2}, nu = sqrt(alpha^2 + 1/4), is selected at coalescence.
struct CalogeroParams {
  double alpha = 1.0;
  double pair_coupling() const { return 2.0 * alpha * alpha; }
};

// Relative tower of 2[-d^2/dr^2 + alpha^2/r^2 + r^2/4] on the half line:
//   E_rel(n) = 2 (2n + 1 + sqrt(alpha^2 + 1/4)).
double calogero_relative_level(double alpha, int n);

// Finite-difference oracle for the same relative tower.
std::vector<double> calogero_relative_oracle(double alpha, int k,
                                             double r_max = 14.0,
                                             int grid_points = 2500);

// k lowest N = 2 levels: CM tower (2p+1) plus the relative tower.
std::vector<double> calogero_n2_levels(const CalogeroParams& p, int k);

// N = 2 Calogero ground minus the Tonks-Girardeau N = 2 ground (= 4).
double calogero_vs_tg_gap(double alpha);

}  // namespace anyonlab

#endif
