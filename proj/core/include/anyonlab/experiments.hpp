#ifndef ANYONLAB_EXPERIMENTS_HPP
#define ANYONLAB_EXPERIMENTS_HPP

#include "anyonlab/anyon2d.hpp"

#include <complex>
#include <string>
#include <vector>

namespace anyonlab {

struct SweepOptions {
  int n_max = 20;          // truncation at eps = 1
  int m_max = 20;
  double omega_b = 0.0;    // 0: eps^{-1/2} policy
  int quad_order = 0;
  double lanczos_tol = 1e-10;
  int lanczos_max_iter = 0;
  std::string cache_dir;
  bool refine_check = true;
  bool scale_truncation = true;  // grow n_max, m_max like eps^{-0.38}
  int threads = 1;

  TwoAnyonSolveOptions solve_options(double epsilon) const;
};

struct SweepRow {
  double alpha = 0.0, epsilon = 0.0;
  int k = 0;
  double lambda2d = 0.0;
  double gap = 0.0;       // lambda2d - N/eps
  double lambda1d = 0.0;
  double residual = 0.0;  // gap - lambda1d; <= solver tolerance when converged
  int cm_p = 0, cm_q = 0, rel_idx = 0;
  bool converged = false;
};

// One row per (eps, k <= k_max); eps_list decreasing within [0.02, 1].
std::vector<SweepRow> epsilon_sweep(double alpha, const std::vector<double>& eps_list,
                                    int k_max, const SweepOptions& opt);

struct OverlapRow {
  double alpha = 0.0, epsilon = 0.0;
  int k = 0;
  double overlap = 0.0;          // eigenspace projection weight in [0, 1]
  double l2_dist = 0.0;          // distance of Psi2D to the dressed eigenspace
  double h1_dist_diag = 0.0;     // grid-difference H1 distance (diagnostic)
  double overlap_nophase = 0.0;  // control: ansatz without e^{-i alpha S}
};

struct OverlapOptions : SweepOptions {
  int quad_order_overlap = 64;
};

std::vector<OverlapRow> overlap_study(double alpha, const std::vector<double>& eps_list,
                                      int k_max, const OverlapOptions& opt);

// The projected 1D function phi^eps_k on an (x1, x2) grid, plus its
// distance to the 1D eigenspace.
struct ProjectedPhi {
  std::vector<double> grid;                           // uniform x-grid
  std::vector<std::vector<std::complex<double>>> values;  // [i1][i2]
  double l2_dist = 0.0;       // distance to the 1D eigenspace
  double diag_max = 0.0;      // max |phi(x, x)| over the grid
  double norm = 0.0;
};

ProjectedPhi project_phi_eps(double alpha, double epsilon, int k,
                             const OverlapOptions& opt, int grid_points = 81,
                             double grid_half_width = 4.0);

}  // namespace anyonlab

#endif
