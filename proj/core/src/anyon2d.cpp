#include "anyonlab/anyon2d.hpp"

#include "anyonlab/oscillator_basis.hpp"
#include "anyonlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <stdexcept>

namespace anyonlab {

int RelativeProblem::basis_index(int n, int m) const {
  return ((m + m_max) / 2) * (n_max + 1) + n;
}

void RelativeProblem::validate() const {
  if (!(alpha > 0.0 && alpha < 2.0))
    throw std::invalid_argument("RelativeProblem: alpha in (0,2)");
  if (!(epsilon > 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("RelativeProblem: epsilon in (0,1]");
  if (!(omega_b > 0.0)) throw std::invalid_argument("RelativeProblem: omega_b > 0");
  if (n_max < 1 || m_max < 1) throw std::invalid_argument("RelativeProblem: truncations >= 1");
  if (m_max % 2 != 0) throw std::invalid_argument("RelativeProblem: m_max even");
}

double default_omega_b(double epsilon) {
  // Geometric mean of the x- and y-confinement frequencies of the relative
  // potential; keeps the squeezed ground state representable.
  return 1.0 / std::sqrt(epsilon);
}

namespace {

// Orthonormal weighted Laguerre functions
//   f_n(t) = sqrt(n!/Gamma(n+nu+1)) t^{nu/2} e^{-t/2} L_n^nu(t)
// for n <= nmax at each quadrature node.  The scaled recurrence keeps all
// values O(1); raw L_n^nu blow up like t^n/n! in the quadrature tail and
// their weighted sums lose the exact cancellations.
Eigen::MatrixXd ortho_laguerre_table(int nmax, double nu,
                                     const QuadratureRule& rule) {
  const int q = rule.order();
  Eigen::MatrixXd f(nmax + 1, q);
  for (int i = 0; i < q; ++i) {
    const double t = rule.nodes[i];
    f(0, i) = std::exp(-0.5 * std::lgamma(nu + 1.0) + 0.5 * nu * std::log(t) -
                       0.5 * t);
    if (nmax >= 1) f(1, i) = (1.0 + nu - t) / std::sqrt(nu + 1.0) * f(0, i);
    for (int n = 1; n < nmax; ++n) {
      const double c1 = std::sqrt((n + 1.0) / (n + nu + 1.0));
      const double c2 = std::sqrt(n * (n + 1.0) * (n + nu) / (n + nu + 1.0));
      f(n + 1, i) =
          (c1 * (2.0 * n + 1.0 + nu - t) * f(n, i) - c2 * f(n - 1, i)) / (n + 1.0);
    }
  }
  return f;
}

// int R_{n,nu} r^2 R_{n',nu'} r dr for all n, n' <= nmax, by generalized
// Gauss-Laguerre at exponent (nu+nu')/2 + 1 (exact for the polynomial part):
// the integral is (2/omega) int f_n^{nu} f_{n'}^{nu'} t dt.
Eigen::MatrixXd radial_r2_block(int nmax, double nu, double nup, double omega,
                                int quad_order) {
  const double a = 0.5 * (nu + nup) + 1.0;
  const QuadratureRule& rule = cached_gauss_laguerre(quad_order, a);
  const Eigen::MatrixXd fn = ortho_laguerre_table(nmax, nu, rule);
  const Eigen::MatrixXd fnp = ortho_laguerre_table(nmax, nup, rule);
  // total weights against the plain t dt measure; the raw rule weights are
  // not representable once a is large, the scaled form always is
  std::vector<double> tw = laguerre_plain_weights(rule);
  for (int i = 0; i < rule.order(); ++i) tw[i] *= rule.nodes[i];
  Eigen::MatrixXd out(nmax + 1, nmax + 1);
  for (int n = 0; n <= nmax; ++n)
    for (int np = 0; np <= nmax; ++np) {
      double s = 0.0;
      for (int i = 0; i < rule.order(); ++i) s += tw[i] * fn(n, i) * fnp(np, i);
      out(n, np) = (2.0 / omega) * s;
    }
  return out;
}

constexpr double kElementCutoff = 1e-14;

}  // namespace

SparseSymmetric assemble_relative(const RelativeProblem& p) {
  p.validate();
  const int quad = p.quad_order > 0 ? p.quad_order : p.n_max + 8;
  const double w = p.omega_b;
  const double inv_e2 = 1.0 / (p.epsilon * p.epsilon);
  // H_rel = 2[(-i grad + a)^2 + w^2 r^2/4]            (diagonal)
  //       + (1/2 - w^2/2 + (1/e^2-1)/4) r^2           (diagonal in m)
  //       - ((1/e^2-1)/4) r^2 cos(2 theta)            (couples m <-> m+-2)
  const double c_iso = 0.5 - 0.5 * w * w + 0.25 * (inv_e2 - 1.0);
  const double c_cos = -0.25 * (inv_e2 - 1.0);

  std::vector<Triplet> trips;
  for (int m = -p.m_max; m <= p.m_max; m += 2) {
    const double nu = std::abs(m + p.alpha);
    // kinetic diagonal
    for (int n = 0; n <= p.n_max; ++n) {
      const int i = p.basis_index(n, m);
      trips.push_back({i, i, 2.0 * w * (2.0 * n + nu + 1.0)});
    }
    // r^2, diagonal in m: closed tridiagonal recurrence
    if (c_iso != 0.0) {
      for (int n = 0; n <= p.n_max; ++n) {
        const int i = p.basis_index(n, m);
        trips.push_back({i, i, c_iso * (2.0 / w) * (2.0 * n + nu + 1.0)});
        if (n + 1 <= p.n_max) {
          const int j = p.basis_index(n + 1, m);
          trips.push_back(
              {i, j, -c_iso * (2.0 / w) * std::sqrt((n + 1.0) * (n + nu + 1.0))});
        }
      }
    }
    // r^2 cos(2 theta), m -> m+2 (angular integral contributes 1/2; the
    // phase in nu = |m+alpha| keeps everything real)
    if (m + 2 <= p.m_max && c_cos != 0.0) {
      const double nup = std::abs(m + 2 + p.alpha);
      const Eigen::MatrixXd block = radial_r2_block(p.n_max, nu, nup, w, quad);
      for (int n = 0; n <= p.n_max; ++n)
        for (int np = 0; np <= p.n_max; ++np) {
          const double v = 0.5 * c_cos * block(n, np);
          if (std::abs(v) < kElementCutoff) continue;
          trips.push_back({p.basis_index(n, m), p.basis_index(np, m + 2), v});
        }
    }
  }
  AssemblyMeta meta{p.alpha, p.epsilon, p.omega_b, p.n_max, p.m_max, quad};
  return SparseSymmetric(p.dimension(), std::move(trips), meta);
}

SparseSymmetric assemble_relative_cached(const RelativeProblem& p,
                                         const std::string& cache_dir,
                                         bool* cache_hit) {
  if (cache_hit) *cache_hit = false;
  if (cache_dir.empty()) return assemble_relative(p);
  const int quad = p.quad_order > 0 ? p.quad_order : p.n_max + 8;
  AssemblyMeta meta{p.alpha, p.epsilon, p.omega_b, p.n_max, p.m_max, quad};
  std::filesystem::create_directories(cache_dir);
  const auto path =
      (std::filesystem::path(cache_dir) / matrix_cache_filename(meta)).string();
  SparseSymmetric cached;
  if (load_matrix_cache(path, meta, cached)) {
    if (cache_hit) *cache_hit = true;
    return cached;
  }
  SparseSymmetric fresh = assemble_relative(p);
  save_matrix_cache(path, fresh);
  return fresh;
}

std::complex<double> relative_wavefunction(const RelativeProblem& p,
                                           const Eigen::VectorXd& coeffs,
                                           double r, double theta) {
  if (coeffs.size() != p.dimension())
    throw std::invalid_argument("relative_wavefunction: coefficient size");
  const double ang_norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  std::complex<double> acc = 0.0;
  for (int m = -p.m_max; m <= p.m_max; m += 2) {
    const double nu = std::abs(m + p.alpha);
    double radial = 0.0;
    for (int n = 0; n <= p.n_max; ++n) {
      const double c = coeffs[p.basis_index(n, m)];
      if (c != 0.0) radial += c * ab_radial_eval(n, nu, p.omega_b, r);
    }
    acc += radial * ang_norm * std::polar(1.0, m * theta);
  }
  return acc;
}

TwoAnyonSpectrum two_anyon_spectrum(double alpha, double epsilon, int k,
                                    const TwoAnyonSolveOptions& opt) {
  if (k < 1) throw std::invalid_argument("two_anyon_spectrum: k >= 1");
  RelativeProblem p;
  p.alpha = alpha;
  p.epsilon = epsilon;
  p.omega_b = opt.omega_b > 0.0 ? opt.omega_b : default_omega_b(epsilon);
  p.n_max = opt.n_max;
  p.m_max = opt.m_max;
  p.quad_order = opt.quad_order;
  p.validate();

  TwoAnyonSpectrum out;
  out.problem = p;
  const int k_rel = k + 4;

  SparseSymmetric m = assemble_relative_cached(p, opt.cache_dir, &out.cache_hit);
  LanczosOptions lopt;
  lopt.tol = opt.lanczos_tol;
  lopt.max_iter = opt.lanczos_max_iter;
  // The assembled relative operator is positive definite, so plain inversion
  // is a valid spectral transform; it collapses the iteration count for the
  // 1/eps-clustered spectra at small eps.
  lopt.shift_invert = true;
  lopt.shift = 0.0;
  out.relative = lanczos_smallest(m, k_rel, lopt);

  // Galerkin values are variational upper bounds; a doubled-truncation
  // re-solve bounds the truncation error from above.
  std::vector<bool> rel_conv(k_rel, false);
  if (opt.refine_check) {
    RelativeProblem p2 = p;
    p2.n_max = 2 * p.n_max;
    p2.m_max = 2 * p.m_max;
    p2.quad_order = p2.n_max + 8;
    SparseSymmetric m2 = assemble_relative_cached(p2, opt.cache_dir, nullptr);
    LanczosOptions lopt2 = lopt;
    lopt2.want_vectors = false;
    lopt2.shift_invert = true;
    SpectralResult refined = lanczos_smallest(m2, k_rel, lopt2);
    for (int i = 0; i < k_rel; ++i) {
      const double a = out.relative.eigenvalues[i];
      const double b = refined.eigenvalues[i];
      rel_conv[i] = out.relative.converged[i] && refined.converged[i] &&
                    std::abs(a - b) < 1e-4 * (1.0 + std::abs(a));
    }
  } else {
    for (int i = 0; i < k_rel; ++i) rel_conv[i] = out.relative.converged[i];
  }

  // k smallest sums of the exact CM levels and the relative levels.
  std::vector<Anyon2DLevel> cand;
  const double top_rel = out.relative.eigenvalues[std::min(k_rel, k) - 1];
  const double budget = top_rel + 2.0 * k + 2.0;  // CM excitation allowance
  for (int pq = 0; 2 * pq + 1 <= budget; ++pq)
    for (int qq = 0; (2.0 * qq + 1.0) / epsilon <= budget; ++qq)
      for (int i = 0; i < k_rel; ++i) {
        const double lam = (2.0 * pq + 1.0) + (2.0 * qq + 1.0) / epsilon +
                           out.relative.eigenvalues[i];
        cand.push_back({lam, pq, qq, i, out.relative.eigenvalues[i], rel_conv[i]});
      }
  std::sort(cand.begin(), cand.end(), [](const Anyon2DLevel& a, const Anyon2DLevel& b) {
    return std::tie(a.lambda, a.cm_p, a.cm_q, a.rel_idx) <
           std::tie(b.lambda, b.cm_p, b.cm_q, b.rel_idx);
  });
  if (static_cast<int>(cand.size()) < k)
    throw std::runtime_error("two_anyon_spectrum: enumeration window too small");
  cand.resize(k);
  out.levels = std::move(cand);
  return out;
}

}  // namespace anyonlab
