#include <doctest.h>

#include "anyonlab/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace anyonlab;

namespace {

// Independent scaled Laguerre recurrence (duplicated on purpose: the library
// path must not be its own oracle).
double ortho_laguerre(int n, double a, double t) {
  double f0 = std::exp(-0.5 * std::lgamma(a + 1.0) + 0.5 * a * std::log(t) - 0.5 * t);
  if (n == 0) return f0;
  double f1 = (1.0 + a - t) / std::sqrt(a + 1.0) * f0;
  for (int k = 1; k < n; ++k) {
    const double c1 = std::sqrt((k + 1.0) / (k + a + 1.0));
    const double c2 = std::sqrt(k * (k + 1.0) * (k + a) / (k + a + 1.0));
    const double f2 = (c1 * (2.0 * k + 1.0 + a - t) * f1 - c2 * f0) / (k + 1.0);
    f0 = f1;
    f1 = f2;
  }
  return f1;
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("two point hermite rule is the closed form") {
  const auto rule = gauss_hermite(2);
  const double x = 1.0 / std::sqrt(2.0);
  CHECK(rule.nodes[0] == doctest::Approx(-x).epsilon(1e-14));
  CHECK(rule.nodes[1] == doctest::Approx(x).epsilon(1e-14));
  CHECK(rule.weights[0] == doctest::Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-14));
  CHECK(rule.weights[1] == doctest::Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-14));
}

TEST_CASE("zeroth moments are exact") {
  for (int order : {1, 2, 5, 16, 64}) {
    const auto gh = gauss_hermite(order);
    double s = 0.0;
    for (double w : gh.weights) s += w;
    CHECK(std::abs(s - gh.moment0()) < 1e-13 * gh.moment0());
  }
  for (double a : {0.0, 0.5, 3.7}) {
    const auto gl = gauss_laguerre(24, a);
    double s = 0.0;
    for (double w : gl.weights) s += w;
    CHECK(std::abs(s - gl.moment0()) < 1e-13 * gl.moment0());
  }
  const auto tr = make_quadrature(QuadKind::TrapezoidAngular, 7);
  double s = 0.0;
  for (double w : tr.weights) s += w;
  CHECK(std::abs(s - 2.0 * std::numbers::pi) < 1e-13);
}

TEST_CASE("hermite moments to high degree") {
  const auto gh = gauss_hermite(32);
  double m4 = 0.0, m2 = 0.0;
  for (int i = 0; i < gh.order(); ++i) {
    const double x = gh.nodes[i];
    m2 += gh.weights[i] * x * x;
    m4 += gh.weights[i] * x * x * x * x;
  }
  CHECK(std::abs(m2 - std::sqrt(std::numbers::pi) / 2) < 1e-12);
  CHECK(std::abs(m4 - 3.0 * std::sqrt(std::numbers::pi) / 4) < 1e-12);
}

TEST_CASE("hermite nodes are symmetric") {
  for (int order : {9, 40}) {
    const auto gh = gauss_hermite(order);
    for (int i = 0; i < order; ++i) {
      CHECK(gh.nodes[i] == -gh.nodes[order - 1 - i]);
      CHECK(gh.weights[i] == gh.weights[order - 1 - i]);
    }
    if (order % 2 == 1) CHECK(gh.nodes[order / 2] == 0.0);
  }
}

TEST_CASE("tail weights carry relative accuracy") {
  // Regression: eigenvector-derived weights are only absolutely accurate,
  // and the error explodes once the weight function is divided back out.
  // The orthonormality sums below hit exactly that cancellation.
  const double a = 1.5;
  const auto gl = gauss_laguerre(64, a);
  const auto tw = laguerre_plain_weights(gl);
  for (int n : {0, 5, 20}) {
    double norm = 0.0, r2 = 0.0, cross = 0.0;
    for (int i = 0; i < gl.order(); ++i) {
      const double t = gl.nodes[i];
      const double fn = ortho_laguerre(n, a, t);
      norm += tw[i] * fn * fn;
      r2 += tw[i] * t * fn * fn;
      cross += tw[i] * fn * ortho_laguerre(n + 1, a, t);
    }
    CHECK(std::abs(norm - 1.0) < 1e-10);
    CHECK(std::abs(r2 - (2.0 * n + a + 1.0)) < 1e-9 * (2.0 * n + a + 1.0));
    CHECK(std::abs(cross) < 1e-10);
  }
}

TEST_CASE("plain weights match raw weights at small exponent") {
  const double a = 2.5;
  const auto gl = gauss_laguerre(20, a);
  const auto tw = laguerre_plain_weights(gl);
  for (int i = 0; i < gl.order(); ++i) {
    const double t = gl.nodes[i];
    const double raw = tw[i] * std::exp(a * std::log(t) - t);
    CHECK(std::abs(raw - gl.weights[i]) < 1e-12 * gl.weights[i]);
  }
}

TEST_CASE("plain weights survive exponents past the gamma overflow") {
  // Raw weights scale like Gamma(a+1) and stop being representable near
  // a ~ 170; the scaled form must stay finite and orthonormalizing.
  const double a = 180.0;
  const auto gl = gauss_laguerre(48, a);
  const auto tw = laguerre_plain_weights(gl);
  double norm0 = 0.0, cross = 0.0;
  for (int i = 0; i < gl.order(); ++i) {
    CHECK(std::isfinite(tw[i]));
    CHECK(tw[i] > 0.0);
    const double f0 = ortho_laguerre(0, a, gl.nodes[i]);
    norm0 += tw[i] * f0 * f0;
    cross += tw[i] * f0 * ortho_laguerre(7, a, gl.nodes[i]);
  }
  CHECK(std::abs(norm0 - 1.0) < 1e-8);
  CHECK(std::abs(cross) < 1e-8);
}

TEST_CASE("laguerre integrates its own polynomials exactly") {
  const double a = 0.5;
  const auto gl = gauss_laguerre(8, a);
  // int t^k t^a e^{-t} dt = Gamma(a+k+1)
  for (int k : {1, 3, 9, 15}) {
    double s = 0.0;
    for (int i = 0; i < gl.order(); ++i)
      s += gl.weights[i] * std::pow(gl.nodes[i], k);
    const double exact = std::tgamma(a + k + 1.0);
    CHECK(std::abs(s - exact) < 1e-12 * exact);
  }
}

TEST_CASE("rule caches hand back the same object") {
  const auto& a = cached_gauss_hermite(40);
  const auto& b = cached_gauss_hermite(40);
  CHECK(&a == &b);
  const auto& c = cached_gauss_laguerre(24, 1.25);
  const auto& d = cached_gauss_laguerre(24, 1.25);
  CHECK(&c == &d);
}

TEST_CASE("invalid constructions are rejected") {
  CHECK_THROWS_AS(gauss_hermite(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_laguerre(4, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(laguerre_plain_weights(gauss_hermite(4)), std::invalid_argument);
}

}  // TEST_SUITE
