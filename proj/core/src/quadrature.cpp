#include "anyonlab/quadrature.hpp"

#include <Eigen/Dense>

#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace anyonlab {

double QuadratureRule::moment0() const {
  switch (kind) {
    case QuadKind::GaussHermite:
      return std::sqrt(std::numbers::pi);
    case QuadKind::GaussLaguerre:
      return std::tgamma(exponent + 1.0);
    case QuadKind::TrapezoidAngular:
      return 2.0 * std::numbers::pi;
  }
  return 0.0;
}

namespace {

// Symmetric tridiagonal Jacobi matrix -> nodes and weights.
QuadratureRule golub_welsch(QuadKind kind, double exponent,
                            const Eigen::VectorXd& diag,
                            const Eigen::VectorXd& subdiag, double mu0) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, subdiag, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("quadrature: tridiagonal eigensolve failed");

  QuadratureRule rule;
  rule.kind = kind;
  rule.exponent = exponent;
  const int n = static_cast<int>(diag.size());
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()[i];
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

// Orthonormal Hermite function h_k(x) (weight e^{-x^2} folded in); returns
// h_n and h_{n-1}.  Mirrors the basis recurrence but kept local so the
// quadrature layer stays self-contained.
void hermite_pair(int n, double x, double& hn, double& hnm1) {
  double h0 = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (n == 0) {
    hn = h0;
    hnm1 = 0.0;
    return;
  }
  double h1 = x * std::sqrt(2.0) * h0;
  for (int k = 1; k < n; ++k) {
    const double h2 = x * std::sqrt(2.0 / (k + 1.0)) * h1 -
                      std::sqrt(k / (k + 1.0)) * h0;
    h0 = h1;
    h1 = h2;
  }
  hn = h1;
  hnm1 = h0;
}

// Orthonormal Laguerre function
//   f_k(t) = sqrt(k!/Gamma(k+a+1)) t^{a/2} e^{-t/2} L_k^a(t);
// all values O(1), unlike raw L_k^a in the quadrature tail.
void laguerre_pair(int n, double a, double t, double& fn, double& fnm1) {
  double f0 = std::exp(-0.5 * std::lgamma(a + 1.0) + 0.5 * a * std::log(t) -
                       0.5 * t);
  if (n == 0) {
    fn = f0;
    fnm1 = 0.0;
    return;
  }
  double f1 = (1.0 + a - t) / std::sqrt(a + 1.0) * f0;
  for (int k = 1; k < n; ++k) {
    const double c1 = std::sqrt((k + 1.0) / (k + a + 1.0));
    const double c2 = std::sqrt(k * (k + 1.0) * (k + a) / (k + a + 1.0));
    const double f2 = (c1 * (2.0 * k + 1.0 + a - t) * f1 - c2 * f0) / (k + 1.0);
    f0 = f1;
    f1 = f2;
  }
  fn = f1;
  fnm1 = f0;
}

}  // namespace

QuadratureRule gauss_hermite(int order) {
  if (order < 1) throw std::invalid_argument("gauss_hermite: order >= 1");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
  Eigen::VectorXd sub(order - 1 > 0 ? order - 1 : 0);
  for (int k = 1; k < order; ++k) sub[k - 1] = std::sqrt(0.5 * k);
  auto rule = golub_welsch(QuadKind::GaussHermite, 0.0, diag, sub,
                           std::sqrt(std::numbers::pi));
  // Golub-Welsch eigenvector weights are only absolutely accurate; the tiny
  // tail weights lose all relative accuracy, which matters whenever the
  // weight is unfolded by e^{x^2}.  Newton-polish the nodes and recompute
  // every weight from the derivative formula w_i = e^{-x^2} / (n h_{n-1}^2).
  for (int i = 0; i < order; ++i) {
    double x = rule.nodes[i];
    double hn, hm;
    for (int it = 0; it < 3; ++it) {
      hermite_pair(order, x, hn, hm);
      const double deriv = std::sqrt(2.0 * order) * hm - x * hn;
      if (deriv == 0.0) break;
      x -= hn / deriv;
    }
    hermite_pair(order, x, hn, hm);
    rule.nodes[i] = x;
    rule.weights[i] = std::exp(-x * x) / (order * hm * hm);
  }
  // Enforce exact symmetry of the node set about 0.
  for (int i = 0, j = order - 1; i < j; ++i, --j) {
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.weights[i] = rule.weights[j] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

QuadratureRule gauss_laguerre(int order, double exponent) {
  if (order < 1) throw std::invalid_argument("gauss_laguerre: order >= 1");
  if (exponent <= -1.0)
    throw std::invalid_argument("gauss_laguerre: exponent > -1 required");
  Eigen::VectorXd diag(order);
  Eigen::VectorXd sub(order - 1 > 0 ? order - 1 : 0);
  for (int k = 0; k < order; ++k) diag[k] = 2.0 * k + exponent + 1.0;
  for (int k = 1; k < order; ++k) sub[k - 1] = std::sqrt(k * (k + exponent));
  auto rule = golub_welsch(QuadKind::GaussLaguerre, exponent, diag, sub,
                           std::tgamma(exponent + 1.0));
  // Same relative-accuracy repair as in gauss_hermite: Newton on the scaled
  // Laguerre function, then
  //   w_i = t^{a+1} e^{-t} / ((n+1)(n+a+1) f_{n+1}(t)^2),
  // every factor O(1) apart from the explicit weight exponential.
  const double a = exponent;
  for (int i = 0; i < order; ++i) {
    double t = rule.nodes[i];
    double fn, fm;
    for (int it = 0; it < 3; ++it) {
      laguerre_pair(order, a, t, fn, fm);
      const double denom = order * fn - std::sqrt(order * (order + a)) * fm;
      if (denom == 0.0) break;
      t -= t * fn / denom;
    }
    double fn1, fdump;
    laguerre_pair(order + 1, a, t, fn1, fdump);
    rule.nodes[i] = t;
    rule.weights[i] = std::exp((a + 1.0) * std::log(t) - t) /
                      ((order + 1.0) * (order + a + 1.0) * fn1 * fn1);
  }
  return rule;
}

std::vector<double> laguerre_plain_weights(const QuadratureRule& rule) {
  if (rule.kind != QuadKind::GaussLaguerre)
    throw std::invalid_argument("laguerre_plain_weights: Laguerre rule required");
  const int q = rule.order();
  const double a = rule.exponent;
  std::vector<double> out(q);
  for (int i = 0; i < q; ++i) {
    const double t = rule.nodes[i];
    double fn1, fdump;
    laguerre_pair(q + 1, a, t, fn1, fdump);
    out[i] = t / ((q + 1.0) * (q + a + 1.0) * fn1 * fn1);
  }
  return out;
}

namespace {

QuadratureRule trapezoid_angular(int order) {
  if (order < 1) throw std::invalid_argument("trapezoid_angular: order >= 1");
  QuadratureRule rule;
  rule.kind = QuadKind::TrapezoidAngular;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const double h = 2.0 * std::numbers::pi / order;
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = i * h;
    rule.weights[i] = h;
  }
  return rule;
}

}  // namespace

QuadratureRule make_quadrature(QuadKind kind, int order, double exponent) {
  switch (kind) {
    case QuadKind::GaussHermite:
      return gauss_hermite(order);
    case QuadKind::GaussLaguerre:
      return gauss_laguerre(order, exponent);
    case QuadKind::TrapezoidAngular:
      return trapezoid_angular(order);
  }
  throw std::invalid_argument("make_quadrature: unsupported kind");
}

namespace {
std::mutex g_cache_mutex;
std::map<std::pair<int, double>, QuadratureRule> g_laguerre_cache;
std::map<int, QuadratureRule> g_hermite_cache;
}  // namespace

const QuadratureRule& cached_gauss_laguerre(int order, double exponent) {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto key = std::make_pair(order, exponent);
  auto it = g_laguerre_cache.find(key);
  if (it == g_laguerre_cache.end())
    it = g_laguerre_cache.emplace(key, gauss_laguerre(order, exponent)).first;
  return it->second;
}

const QuadratureRule& cached_gauss_hermite(int order) {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto it = g_hermite_cache.find(order);
  if (it == g_hermite_cache.end())
    it = g_hermite_cache.emplace(order, gauss_hermite(order)).first;
  return it->second;
}

}  // namespace anyonlab
