#ifndef ANYONLAB_QUADRATURE_HPP
#define ANYONLAB_QUADRATURE_HPP

#include <cmath>
#include <vector>

namespace anyonlab {

enum class QuadKind {
  GaussHermite,          // weight exp(-x^2) on (-inf, inf)
  GaussLaguerre,         // weight x^a exp(-x) on (0, inf), real a > -1
  TrapezoidAngular       // uniform nodes on [0, 2*pi), exact for trig polys
};

struct QuadratureRule {
  QuadKind kind;
  double exponent = 0.0;          // Laguerre exponent a, unused otherwise
  std::vector<double> nodes;
  std::vector<double> weights;    // all strictly positive

  int order() const { return static_cast<int>(nodes.size()); }
  // Zeroth moment of the weight function (sqrt(pi), Gamma(a+1), 2*pi).
  double moment0() const;
};

// Golub-Welsch construction from the three-term recurrence of the
// orthogonal polynomial family attached to the weight.
QuadratureRule make_quadrature(QuadKind kind, int order, double exponent = 0.0);

QuadratureRule gauss_hermite(int order);
QuadratureRule gauss_laguerre(int order, double exponent);

// Process-wide immutable cache for the generalized Laguerre rules: the
// exponent nu = |m + alpha| varies continuously with alpha, so rules are
// built per exponent and reused.
const QuadratureRule& cached_gauss_laguerre(int order, double exponent);
const QuadratureRule& cached_gauss_hermite(int order);

// Weights of a Gauss-Laguerre rule against the plain dt measure, i.e.
// w_i e^{t_i} t_i^{-a}, computed from scaled Laguerre functions so that
// large exponents a cannot overflow (the raw weights scale like Gamma(a+1)
// and stop being representable near a ~ 170).
std::vector<double> laguerre_plain_weights(const QuadratureRule& rule);

// sum_i w_i * exp(x_i^2) * f(x_i) ~ int f(x) dx for f decaying like the
// Hermite weight; `scale` substitutes x -> scale * t.
template <class F>
double integrate_hermite(const QuadratureRule& gh, F&& f, double scale = 1.0) {
  double acc = 0.0;
  for (int i = 0; i < gh.order(); ++i) {
    const double t = gh.nodes[i];
    acc += gh.weights[i] * std::exp(t * t) * f(scale * t);
  }
  return acc * scale;
}

}  // namespace anyonlab

#endif
