#ifndef ANYONLAB_LANCZOS_HPP
#define ANYONLAB_LANCZOS_HPP

#include "anyonlab/sparse_symmetric.hpp"

#include <vector>

namespace anyonlab {

struct SpectralResult {
  std::vector<double> eigenvalues;           // non-decreasing
  std::vector<double> residuals;             // ||M v - lambda v|| per pair
  std::vector<bool> converged;               // residual <= tol*(1+|lambda|)
  std::vector<Eigen::VectorXd> eigenvectors;
  AssemblyMeta truncation;                   // echo of assembly provenance
  int iterations = 0;
};

struct LanczosOptions {
  double tol = 1e-10;
  int max_iter = 0;        // 0: min(dimension, 4k + 200)
  bool shift_invert = false;
  double shift = 0.0;      // only with shift_invert
  bool want_vectors = true;
};

// k smallest eigenpairs by Lanczos with full reorthogonalization on a
// deterministic start vector.  Non-convergence reports partial results
// with converged flags false.
SpectralResult lanczos_smallest(const SparseSymmetric& m, int k,
                                const LanczosOptions& opt = {});

}  // namespace anyonlab

#endif
