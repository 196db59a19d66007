#include "anyonlab/experiments.hpp"

#include "anyonlab/oscillator_basis.hpp"
#include "anyonlab/quadrature.hpp"
#include "anyonlab/tonks_girardeau.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anyonlab {

namespace {

int round_up_even(int v) { return (v % 2 == 0) ? v : v + 1; }

// Per-m radial profiles sum_n c_{n,m} R_{n,|m+alpha|}(r), one Laguerre
// recurrence pass per (r, m) block.
std::vector<double> radial_profiles(const RelativeProblem& p,
                                    const Eigen::VectorXd& coeffs, double r) {
  const int blocks = p.m_max + 1;  // m in {-m_max,...,m_max} step 2
  std::vector<double> out(blocks, 0.0);
  const double t = 0.5 * p.omega_b * r * r;
  const double log_t = (t > 0.0) ? std::log(t) : 0.0;
  std::vector<double> lag(p.n_max + 1);
  for (int b = 0; b < blocks; ++b) {
    const int m = -p.m_max + 2 * b;
    const double nu = std::abs(m + p.alpha);
    if (t == 0.0) {
      // R_{n,nu}(0) = sqrt(omega) for nu = 0, else 0
      if (nu == 0.0) {
        double s = 0.0;
        for (int n = 0; n <= p.n_max; ++n) s += coeffs[p.basis_index(n, 0)];
        out[b] = std::sqrt(p.omega_b) * s;
      }
      continue;
    }
    lag[0] = 1.0;
    if (p.n_max >= 1) lag[1] = 1.0 + nu - t;
    for (int n = 1; n < p.n_max; ++n)
      lag[n + 1] =
          ((2.0 * n + 1.0 + nu - t) * lag[n] - (n + nu) * lag[n - 1]) / (n + 1.0);
    double s = 0.0;
    for (int n = 0; n <= p.n_max; ++n) {
      const double c = coeffs[p.basis_index(n, m)];
      if (c == 0.0) continue;
      const double log_norm = 0.5 * (std::log(p.omega_b) + std::lgamma(n + 1.0) -
                                     std::lgamma(n + nu + 1.0));
      s += c * lag[n] * std::exp(log_norm + 0.5 * nu * log_t - 0.5 * t);
    }
    out[b] = s;
  }
  return out;
}

std::complex<double> profile_sum(const RelativeProblem& p,
                                 const std::vector<double>& prof, double theta) {
  const double ang_norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  std::complex<double> acc = 0.0;
  for (int b = 0; b <= p.m_max; ++b) {
    if (prof[b] == 0.0) continue;
    const int m = -p.m_max + 2 * b;
    acc += prof[b] * std::polar(ang_norm, m * theta);
  }
  return acc;
}

// CM eigenfunctions of the split Hamiltonian: in x the frequency doubles,
// in y it is 2/eps.
double cm_x_eval(int p, double X) {
  return std::pow(2.0, 0.25) * hermite_eval(p, std::sqrt(2.0) * X);
}

// int cm_y_q(Y) u(y1)u(y2)|_{ry=0-part stripped} dY with the squeezed pair
// ground state split as (pi eps)^{-1/2} e^{-Y^2/eps} e^{-ry^2/(4 eps)}.
double cm_y_pair_integral(int q, double eps, int order) {
  const QuadratureRule& gh = cached_gauss_hermite(order);
  const double c = std::pow(2.0 / eps, 0.25);
  const double s2e = std::sqrt(2.0 / eps);
  return integrate_hermite(
      gh,
      [&](double Y) { return c * hermite_eval(q, s2e * Y) * std::exp(-Y * Y / eps); },
      std::sqrt(0.5 * eps));
}

// Z(rx) = int cm_x_p(X) psi(X + rx/2, X - rx/2) dX for a two-particle state.
double cm_x_pair_integral(const TGEigenstate& psi, int p, double rx, int order) {
  const QuadratureRule& gh = cached_gauss_hermite(order);
  std::vector<double> xs(2);
  return integrate_hermite(
      gh,
      [&](double X) {
        xs[0] = X + 0.5 * rx;
        xs[1] = X - 0.5 * rx;
        return cm_x_eval(p, X) * tg_eigenfunction_eval(psi, xs);
      },
      1.0 / std::sqrt(2.0));
}

// Exchange phase of the pair, principal branch: S = arctan(ry/rx), with the
// rx = 0 limit +-pi/2.
double pair_phase(double rx, double ry) {
  if (rx == 0.0) return (ry >= 0.0 ? 0.5 : -0.5) * std::numbers::pi;
  return std::atan(ry / rx);
}

struct OverlapWork {
  double eps = 0.0;
  const RelativeProblem* prob = nullptr;
  // total-weight node sets for the relative (rx, ry) plane
  std::vector<double> rx_nodes, rx_w, ry_nodes, ry_w;
  // relative eigenfunction on the tensor grid, one row per rx node
  std::vector<std::vector<std::complex<double>>> phi_rel;

  void build(const RelativeProblem& p, const Eigen::VectorXd& coeffs, double eps_,
             int order) {
    eps = eps_;
    prob = &p;
    const QuadratureRule& gh = cached_gauss_hermite(order);
    const double cx = 2.0 / std::sqrt(1.0 + p.omega_b);
    const double cy = 2.0 / std::sqrt(p.omega_b + 1.0 / eps);
    rx_nodes.resize(gh.order());
    rx_w.resize(gh.order());
    ry_nodes.resize(gh.order());
    ry_w.resize(gh.order());
    for (int i = 0; i < gh.order(); ++i) {
      const double t = gh.nodes[i];
      const double tw = gh.weights[i] * std::exp(t * t);
      rx_nodes[i] = cx * t;
      rx_w[i] = cx * tw;
      ry_nodes[i] = cy * t;
      ry_w[i] = cy * tw;
    }
    phi_rel.assign(rx_nodes.size(), {});
    for (std::size_t i = 0; i < rx_nodes.size(); ++i) {
      phi_rel[i].resize(ry_nodes.size());
      for (std::size_t j = 0; j < ry_nodes.size(); ++j) {
        const double r = std::hypot(rx_nodes[i], ry_nodes[j]);
        const auto prof = radial_profiles(p, coeffs, r);
        phi_rel[i][j] = profile_sum(p, prof, std::atan2(ry_nodes[j], rx_nodes[i]));
      }
    }
  }

  // <Psi, psi u u e^{-i alpha S}> given the CM-x pair integrals Z on rx_nodes;
  // with_phase = false drops the gauge factor (control ansatz).
  std::complex<double> amplitude(const std::vector<double>& z, double iy,
                                 bool with_phase) const {
    const double alpha = prob->alpha;
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < rx_nodes.size(); ++i) {
      if (z[i] == 0.0) continue;
      std::complex<double> inner = 0.0;
      for (std::size_t j = 0; j < ry_nodes.size(); ++j) {
        const double ry = ry_nodes[j];
        std::complex<double> t =
            std::conj(phi_rel[i][j]) * std::exp(-ry * ry / (4.0 * eps));
        if (with_phase)
          t *= std::polar(1.0, -alpha * pair_phase(rx_nodes[i], ry));
        inner += ry_w[j] * t;
      }
      acc += rx_w[i] * z[i] * inner;
    }
    return acc * iy / std::sqrt(std::numbers::pi * eps);
  }
};

}  // namespace

TwoAnyonSolveOptions SweepOptions::solve_options(double epsilon) const {
  TwoAnyonSolveOptions o;
  const double s = scale_truncation ? std::pow(epsilon, -0.38) : 1.0;
  o.n_max = std::max(n_max, static_cast<int>(std::lround(n_max * s)));
  o.m_max = round_up_even(
      std::max(m_max, static_cast<int>(std::lround(m_max * s))));
  o.omega_b = omega_b;
  o.quad_order = quad_order;
  o.lanczos_tol = lanczos_tol;
  o.lanczos_max_iter = lanczos_max_iter;
  o.cache_dir = cache_dir;
  o.refine_check = refine_check;
  return o;
}

std::vector<SweepRow> epsilon_sweep(double alpha, const std::vector<double>& eps_list,
                                    int k_max, const SweepOptions& opt) {
  if (k_max < 1) throw std::invalid_argument("epsilon_sweep: k >= 1");
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] >= 0.02 && eps_list[i] <= 1.0))
      throw std::invalid_argument("epsilon_sweep: eps in [0.02, 1]");
    if (i > 0 && !(eps_list[i] < eps_list[i - 1]))
      throw std::invalid_argument("epsilon_sweep: eps_list must decrease");
  }
  const auto tg = tg_levels(2, k_max);
  std::vector<SweepRow> rows;
  rows.reserve(eps_list.size() * k_max);
  for (double eps : eps_list) {
    const auto spec = two_anyon_spectrum(alpha, eps, k_max, opt.solve_options(eps));
    for (int k = 1; k <= k_max; ++k) {
      const auto& lv = spec.levels[k - 1];
      SweepRow r;
      r.alpha = alpha;
      r.epsilon = eps;
      r.k = k;
      r.lambda2d = lv.lambda;
      r.gap = lv.lambda - 2.0 / eps;
      r.lambda1d = tg[k - 1].energy;
      r.residual = r.gap - r.lambda1d;
      r.cm_p = lv.cm_p;
      r.cm_q = lv.cm_q;
      r.rel_idx = lv.rel_idx;
      r.converged = lv.converged;
      rows.push_back(r);
    }
  }
  return rows;
}

std::vector<OverlapRow> overlap_study(double alpha, const std::vector<double>& eps_list,
                                      int k_max, const OverlapOptions& opt) {
  if (k_max < 1) throw std::invalid_argument("overlap_study: k >= 1");
  const int order = opt.quad_order_overlap;
  std::vector<OverlapRow> rows;
  for (double eps : eps_list) {
    const auto spec = two_anyon_spectrum(alpha, eps, k_max, opt.solve_options(eps));
    for (int k = 1; k <= k_max; ++k) {
      const auto& lv = spec.levels[k - 1];
      const auto space = tg_eigenspace(2, k - 1);

      OverlapWork work;
      work.build(spec.problem, spec.relative.eigenvectors[lv.rel_idx], eps, order);
      const double iy = cm_y_pair_integral(lv.cm_q, eps, order);

      double ov = 0.0, ov0 = 0.0;
      std::vector<double> z(work.rx_nodes.size());
      for (const auto& psi : space) {
        for (std::size_t i = 0; i < z.size(); ++i)
          z[i] = cm_x_pair_integral(psi, lv.cm_p, work.rx_nodes[i], order);
        ov += std::norm(work.amplitude(z, iy, true));
        ov0 += std::norm(work.amplitude(z, iy, false));
      }
      OverlapRow r;
      r.alpha = alpha;
      r.epsilon = eps;
      r.k = k;
      r.overlap = ov;
      r.l2_dist = std::sqrt(std::max(0.0, 1.0 - ov));
      r.overlap_nophase = ov0;

      // grid H1 distance of the normalized projection to the eigenspace
      {
        const auto phi = project_phi_eps(alpha, eps, k, opt);
        const auto& g = phi.grid;
        const int gp = static_cast<int>(g.size());
        const double h = g[1] - g[0];
        if (phi.norm > 1e-14) {
          std::vector<std::vector<std::complex<double>>> d = phi.values;
          for (auto& row : d)
            for (auto& v : row) v /= phi.norm;
          std::vector<double> xs(2);
          for (const auto& psi : space) {
            std::complex<double> c = 0.0;
            for (int i = 0; i < gp; ++i)
              for (int j = 0; j < gp; ++j) {
                xs[0] = g[i];
                xs[1] = g[j];
                const double wt = ((i == 0 || i == gp - 1) ? 0.5 : 1.0) *
                                  ((j == 0 || j == gp - 1) ? 0.5 : 1.0) * h * h;
                c += wt * tg_eigenfunction_eval(psi, xs) * d[i][j];
              }
            for (int i = 0; i < gp; ++i)
              for (int j = 0; j < gp; ++j) {
                xs[0] = g[i];
                xs[1] = g[j];
                d[i][j] -= c * tg_eigenfunction_eval(psi, xs);
              }
          }
          double h1 = 0.0;
          for (int i = 0; i < gp; ++i)
            for (int j = 0; j < gp; ++j) {
              const double wt = ((i == 0 || i == gp - 1) ? 0.5 : 1.0) *
                                ((j == 0 || j == gp - 1) ? 0.5 : 1.0) * h * h;
              double grad = 0.0;
              if (i > 0 && i + 1 < gp)
                grad += std::norm((d[i + 1][j] - d[i - 1][j]) / (2.0 * h));
              if (j > 0 && j + 1 < gp)
                grad += std::norm((d[i][j + 1] - d[i][j - 1]) / (2.0 * h));
              h1 += wt * (std::norm(d[i][j]) + grad);
            }
          r.h1_dist_diag = std::sqrt(h1);
        } else {
          r.h1_dist_diag = 1.0;
        }
      }
      rows.push_back(r);
    }
  }
  return rows;
}

ProjectedPhi project_phi_eps(double alpha, double epsilon, int k,
                             const OverlapOptions& opt, int grid_points,
                             double grid_half_width) {
  if (k < 1) throw std::invalid_argument("project_phi_eps: k >= 1");
  if (grid_points < 3) throw std::invalid_argument("project_phi_eps: grid");
  const int order = opt.quad_order_overlap;
  const auto spec = two_anyon_spectrum(alpha, epsilon, k, opt.solve_options(epsilon));
  const auto& lv = spec.levels[k - 1];
  const auto& coeffs = spec.relative.eigenvectors[lv.rel_idx];
  const RelativeProblem& p = spec.problem;

  const double iy = cm_y_pair_integral(lv.cm_q, epsilon, order);
  const double pref = iy / std::sqrt(std::numbers::pi * epsilon);

  // G(rx) = int phi_rel(rx, ry) e^{i alpha S} e^{-ry^2/(4 eps)} dry
  const QuadratureRule& gh = cached_gauss_hermite(order);
  const double cy = 2.0 / std::sqrt(p.omega_b + 1.0 / epsilon);
  auto g_of = [&](double rx) {
    std::complex<double> acc = 0.0;
    for (int j = 0; j < gh.order(); ++j) {
      const double ry = cy * gh.nodes[j];
      const double tw = cy * gh.weights[j] * std::exp(gh.nodes[j] * gh.nodes[j]);
      const double r = std::hypot(rx, ry);
      const auto prof = radial_profiles(p, coeffs, r);
      const auto val = profile_sum(p, prof, std::atan2(ry, rx));
      acc += tw * val * std::polar(std::exp(-ry * ry / (4.0 * epsilon)),
                                   alpha * pair_phase(rx, ry));
    }
    return acc;
  };

  ProjectedPhi out;
  out.grid.resize(grid_points);
  const double h = 2.0 * grid_half_width / (grid_points - 1);
  for (int i = 0; i < grid_points; ++i) out.grid[i] = -grid_half_width + i * h;

  // rx on the grid depends only on the index difference
  std::vector<std::complex<double>> g_diff(2 * grid_points - 1);
  for (int d = 0; d < 2 * grid_points - 1; ++d)
    g_diff[d] = g_of((d - (grid_points - 1)) * h);

  out.values.assign(grid_points, std::vector<std::complex<double>>(grid_points));
  for (int i = 0; i < grid_points; ++i)
    for (int j = 0; j < grid_points; ++j) {
      const double rx_center = 0.5 * (out.grid[i] + out.grid[j]);
      out.values[i][j] =
          pref * cm_x_eval(lv.cm_p, rx_center) * g_diff[(i - j) + (grid_points - 1)];
    }

  // norms and eigenspace inner products over (X, rx), exact in X
  const double cx = 2.0 / std::sqrt(1.0 + p.omega_b);
  std::vector<double> rx_nodes(gh.order()), rx_w(gh.order());
  for (int i = 0; i < gh.order(); ++i) {
    rx_nodes[i] = cx * gh.nodes[i];
    rx_w[i] = cx * gh.weights[i] * std::exp(gh.nodes[i] * gh.nodes[i]);
  }
  double norm2 = 0.0;
  std::vector<std::complex<double>> g_nodes(gh.order());
  for (int i = 0; i < gh.order(); ++i) {
    g_nodes[i] = g_of(rx_nodes[i]);
    norm2 += rx_w[i] * std::norm(g_nodes[i]);
  }
  norm2 *= pref * pref;
  out.norm = std::sqrt(std::max(norm2, 0.0));

  double proj2 = 0.0;
  for (const auto& psi : tg_eigenspace(2, k - 1)) {
    std::complex<double> a = 0.0;
    for (int i = 0; i < gh.order(); ++i)
      a += rx_w[i] * cm_x_pair_integral(psi, lv.cm_p, rx_nodes[i], order) * g_nodes[i];
    proj2 += std::norm(a) * pref * pref;
  }
  if (out.norm > 1e-14) {
    const double frac = std::min(proj2 / norm2, 1.0);
    out.l2_dist = std::sqrt(std::max(0.0, 1.0 - frac));
  } else {
    out.l2_dist = 1.0;
  }

  double dmax = 0.0;
  for (int i = 0; i < grid_points; ++i)
    dmax = std::max(dmax, std::abs(out.values[i][i]));
  out.diag_max = dmax;
  return out;
}

}  // namespace anyonlab
