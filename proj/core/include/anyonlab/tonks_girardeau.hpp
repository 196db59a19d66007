#ifndef ANYONLAB_TONKS_GIRARDEAU_HPP
#define ANYONLAB_TONKS_GIRARDEAU_HPP

#include <span>
#include <vector>

namespace anyonlab {

// A fermionic configuration: strictly increasing non-negative oscillator
// indices.  Energy is the sum of the one-particle levels 2v+1.
struct OrbitalSet {
  std::vector<int> orbitals;

  double energy() const;
  bool operator==(const OrbitalSet&) const = default;
  bool operator<(const OrbitalSet& o) const { return orbitals < o.orbitals; }
};

struct TGEigenstate {
  OrbitalSet orbitals;
  double energy = 0.0;
  int n_particles = 0;
};

// The k lowest levels of the impenetrable 1D gas via Bose/Fermi mapping:
// best-first enumeration over distinct-orbital sets, ties ordered
// lexicographically by OrbitalSet.
std::vector<TGEigenstate> tg_levels(int n_particles, int k);

// All states degenerate with level index k (0-based into tg_levels output).
std::vector<TGEigenstate> tg_eigenspace(int n_particles, int level_index);

// psi(x) = (N!)^{-1/2} prod_{i<j} sgn(x_i - x_j) det(h_{v_i}(x_j)).
double tg_eigenfunction_eval(const TGEigenstate& state, std::span<const double> xs);

// Analytic gradient of the mapped Slater form, valid off the diagonals
// (sgn factors locally constant there).
std::vector<double> tg_eigenfunction_grad(const TGEigenstate& state,
                                          std::span<const double> xs);

// Tensor Gauss-Hermite value of E1D(psi) = sum_j int(|d_j psi|^2 + x_j^2 psi^2);
// must reproduce state.energy.  N <= 3.
double tg_energy_quadrature(const TGEigenstate& state, int order);

}  // namespace anyonlab

#endif
