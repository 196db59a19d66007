#include "anyonlab/tonks_girardeau.hpp"

#include "anyonlab/oscillator_basis.hpp"
#include "anyonlab/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>

namespace anyonlab {

namespace {
constexpr int kEnumerationCap = 200000;
}

double OrbitalSet::energy() const {
  double e = 0.0;
  for (int v : orbitals) e += 2.0 * v + 1.0;
  return e;
}

std::vector<TGEigenstate> tg_levels(int n_particles, int k) {
  if (n_particles < 1 || n_particles > 12)
    throw std::invalid_argument("tg_levels: 1 <= N <= 12");
  if (k < 1) throw std::invalid_argument("tg_levels: k >= 1");
  if (k > kEnumerationCap)
    throw std::runtime_error("tg_levels: k exceeds enumeration cap");

  // Best-first over single-orbital promotions, dedup on the orbital set.
  using Node = std::pair<double, std::vector<int>>;
  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> heap;
  std::set<std::vector<int>> seen;

  std::vector<int> ground(n_particles);
  for (int j = 0; j < n_particles; ++j) ground[j] = j;
  heap.emplace(static_cast<double>(n_particles) * n_particles, ground);
  seen.insert(ground);

  std::vector<TGEigenstate> out;
  out.reserve(k);
  while (!heap.empty() && static_cast<int>(out.size()) < k) {
    auto [energy, orbs] = heap.top();
    heap.pop();
    out.push_back(TGEigenstate{OrbitalSet{orbs}, energy, n_particles});
    for (int j = 0; j < n_particles; ++j) {
      const int next = orbs[j] + 1;
      if (j + 1 < n_particles && next == orbs[j + 1]) continue;  // occupied
      std::vector<int> promoted = orbs;
      promoted[j] = next;
      if (seen.insert(promoted).second) heap.emplace(energy + 2.0, promoted);
    }
  }
  return out;
}

std::vector<TGEigenstate> tg_eigenspace(int n_particles, int level_index) {
  if (level_index < 0) throw std::invalid_argument("tg_eigenspace: level_index >= 0");
  int want = level_index + 1;
  for (;;) {
    auto levels = tg_levels(n_particles, want + n_particles * 4);
    if (static_cast<int>(levels.size()) <= level_index)
      throw std::invalid_argument("tg_eigenspace: level out of range");
    const double e = levels[level_index].energy;
    if (levels.back().energy > e) {
      std::vector<TGEigenstate> space;
      for (const auto& s : levels)
        if (s.energy == e) space.push_back(s);
      return space;
    }
    want = static_cast<int>(levels.size()) * 2;
  }
}

namespace {

int sign_product(std::span<const double> xs) {
  int s = 1;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const double d = xs[i] - xs[j];
      if (d < 0.0) s = -s;
      else if (d == 0.0) return 0;
    }
  return s;
}

double slater_det(const TGEigenstate& state, std::span<const double> xs,
                  int deriv_column) {
  const int n = state.n_particles;
  Eigen::MatrixXd m(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const int v = state.orbitals.orbitals[i];
      m(i, j) = (j == deriv_column) ? hermite_deriv(v, xs[j]) : hermite_eval(v, xs[j]);
    }
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (n == 3)
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  return Eigen::PartialPivLU<Eigen::MatrixXd>(m).determinant();
}

double norm_const(int n_particles) {
  double fact = 1.0;
  for (int j = 2; j <= n_particles; ++j) fact *= j;
  return 1.0 / std::sqrt(fact);
}

}  // namespace

double tg_eigenfunction_eval(const TGEigenstate& state, std::span<const double> xs) {
  if (static_cast<int>(xs.size()) != state.n_particles)
    throw std::invalid_argument("tg_eigenfunction_eval: coordinate count mismatch");
  const int s = sign_product(xs);
  if (s == 0) return 0.0;  // exact diagonal vanishing
  return norm_const(state.n_particles) * s * slater_det(state, xs, -1);
}

std::vector<double> tg_eigenfunction_grad(const TGEigenstate& state,
                                          std::span<const double> xs) {
  const int n = state.n_particles;
  if (static_cast<int>(xs.size()) != n)
    throw std::invalid_argument("tg_eigenfunction_grad: coordinate count mismatch");
  int s = sign_product(xs);
  if (s == 0) s = 1;  // squared downstream; any branch value works
  const double c = norm_const(n) * s;
  std::vector<double> grad(n);
  for (int j = 0; j < n; ++j) grad[j] = c * slater_det(state, xs, j);
  return grad;
}

double tg_energy_quadrature(const TGEigenstate& state, int order) {
  const int n = state.n_particles;
  if (n > 3) throw std::runtime_error("tg_energy_quadrature: N <= 3 supported");
  if (order < 2) throw std::invalid_argument("tg_energy_quadrature: order >= 2");
  const QuadratureRule& gh = cached_gauss_hermite(order);

  // Total weights w_i * exp(x_i^2); integrand carries its own Gaussian.
  std::vector<double> tw(order);
  for (int i = 0; i < order; ++i)
    tw[i] = gh.weights[i] * std::exp(gh.nodes[i] * gh.nodes[i]);

  double energy = 0.0, norm = 0.0;
  std::vector<int> idx(n, 0);
  std::vector<double> xs(n);
  for (;;) {
    double w = 1.0;
    for (int j = 0; j < n; ++j) {
      xs[j] = gh.nodes[idx[j]];
      w *= tw[idx[j]];
    }
    const double psi = tg_eigenfunction_eval(state, xs);
    const auto grad = tg_eigenfunction_grad(state, xs);
    double local = 0.0;
    for (int j = 0; j < n; ++j) local += grad[j] * grad[j] + xs[j] * xs[j] * psi * psi;
    energy += w * local;
    norm += w * psi * psi;

    int j = n - 1;
    while (j >= 0 && ++idx[j] == order) idx[j--] = 0;
    if (j < 0) break;
  }
  return energy / norm;
}

}  // namespace anyonlab
