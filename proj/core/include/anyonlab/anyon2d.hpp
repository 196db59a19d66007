#ifndef ANYONLAB_ANYON2D_HPP
#define ANYONLAB_ANYON2D_HPP

#include "anyonlab/lanczos.hpp"
#include "anyonlab/sparse_symmetric.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace anyonlab {

// Relative-coordinate problem for two anyons in the anisotropic trap:
//   H_rel = 2(-i grad_r + alpha r^perp/|r|^2)^2 + r_x^2/2 + r_y^2/(2 eps^2),
// discretized in the orthonormal isotropic AB-oscillator basis
// {R_{n,|m+alpha|} e^{im theta}} with even m (bosonic exchange symmetry).
struct RelativeProblem {
  double alpha = 1.0;      // in (0, 2)
  double epsilon = 1.0;    // in (0, 1]
  double omega_b = 1.0;    // basis scale; default policy eps^{-1/2}
  int n_max = 16;
  int m_max = 16;          // even; basis has m in {-m_max, ..., m_max} even
  int quad_order = 0;      // 0: n_max + 8

  int dimension() const { return (n_max + 1) * (m_max + 1); }
  int basis_index(int n, int m) const;   // block per m, n fast
  void validate() const;
};

double default_omega_b(double epsilon);

SparseSymmetric assemble_relative(const RelativeProblem& p);

// Same matrix through the on-disk cache (keyed by the assembly metadata).
SparseSymmetric assemble_relative_cached(const RelativeProblem& p,
                                         const std::string& cache_dir,
                                         bool* cache_hit = nullptr);

// Value of the relative eigenfunction sum c_{n,m} R_{n,|m+alpha|}(r) e^{im t}
// at polar point (r, theta).
std::complex<double> relative_wavefunction(const RelativeProblem& p,
                                           const Eigen::VectorXd& coeffs,
                                           double r, double theta);

struct Anyon2DLevel {
  double lambda = 0.0;     // total 2D eigenvalue
  int cm_p = 0, cm_q = 0;  // CM quanta: lambda_cm = (2p+1) + (2q+1)/eps
  int rel_idx = 0;         // index into the relative spectrum
  double rel_value = 0.0;
  bool converged = false;  // truncation-doubling change < 1e-4 relative
};

struct TwoAnyonSolveOptions {
  int n_max = 16;
  int m_max = 16;
  double omega_b = 0.0;    // 0: eps^{-1/2}
  int quad_order = 0;
  double lanczos_tol = 1e-10;
  int lanczos_max_iter = 0;
  std::string cache_dir;   // empty: no disk cache
  bool refine_check = true;  // truncation-doubling re-solve
};

struct TwoAnyonSpectrum {
  std::vector<Anyon2DLevel> levels;  // k smallest, sorted
  SpectralResult relative;           // converged relative sector (with vectors)
  RelativeProblem problem;           // echo
  bool cache_hit = false;
};

TwoAnyonSpectrum two_anyon_spectrum(double alpha, double epsilon, int k,
                                    const TwoAnyonSolveOptions& opt = {});

}  // namespace anyonlab

#endif
