#include <doctest.h>

#include "anyonlab/oscillator_basis.hpp"
#include "anyonlab/quadrature.hpp"
#include "anyonlab/radial_fd.hpp"

#include <cmath>
#include <numbers>

using namespace anyonlab;

TEST_SUITE("oscillator_basis") {

TEST_CASE("hermite point values") {
  CHECK(hermite_eval(0, 0.0) == doctest::Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-14));
  CHECK(hermite_eval(1, 0.0) == 0.0);
  CHECK(hermite_eval(4, 0.0) != 0.0);
  // underflow policy: exact zero once the Gaussian is not representable
  CHECK(hermite_eval(0, 40.0) == 0.0);
}

TEST_CASE("hermite orthonormality under 128 node quadrature") {
  const auto& gh = cached_gauss_hermite(128);
  const int pairs[][2] = {{0, 0}, {3, 3}, {30, 30}, {0, 1}, {2, 7}, {17, 30}, {11, 12}};
  for (auto [n, k] : pairs) {
    const double s = integrate_hermite(gh, [&](double x) {
      return hermite_eval(n, x) * hermite_eval(k, x);
    });
    const double expect = (n == k) ? 1.0 : 0.0;
    CHECK(std::abs(s - expect) < 1e-10);
  }
}

TEST_CASE("hermite_eval_all matches single evaluations") {
  double buf[21];
  for (double x : {-2.3, 0.0, 1.7, 6.1}) {
    hermite_eval_all(20, x, buf);
    for (int n = 0; n <= 20; ++n)
      CHECK(buf[n] == doctest::Approx(hermite_eval(n, x)).epsilon(1e-13));
  }
}

TEST_CASE("hermite derivative against central differences") {
  const double h = 1e-6;
  for (int n : {0, 1, 5, 10}) {
    for (double x : {-1.4, 0.2, 2.9}) {
      const double fd = (hermite_eval(n, x + h) - hermite_eval(n, x - h)) / (2 * h);
      CHECK(std::abs(hermite_deriv(n, x) - fd) < 1e-7);
    }
  }
}

TEST_CASE("eigen-relation on a finite difference grid") {
  // ||(-d^2 + x^2) h_n - (2n+1) h_n|| small, discrete 2nd differences
  const double h = 5e-4;
  for (int n : {0, 3, 10}) {
    double worst = 0.0;
    for (double x = -5.0; x <= 5.0; x += 0.25) {
      const double lap =
          (hermite_eval(n, x + h) - 2 * hermite_eval(n, x) + hermite_eval(n, x - h)) / (h * h);
      const double resid = -lap + x * x * hermite_eval(n, x) -
                           oscillator_energy(n) * hermite_eval(n, x);
      worst = std::max(worst, std::abs(resid));
    }
    CHECK(worst < 1e-5);
  }
}

TEST_CASE("oscillator energies") {
  CHECK(oscillator_energy(0) == 1.0);
  CHECK(oscillator_energy(2) == 5.0);
  CHECK(oscillator_energy(10) == 21.0);
}

TEST_CASE("transverse ground state") {
  CHECK(uepsilon_eval(1.0, 0.0) == doctest::Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-14));
  CHECK(uepsilon_eval(0.25, 0.5) ==
        doctest::Approx(std::pow(std::sqrt(0.25 * std::numbers::pi), -0.5) * std::exp(-0.5)).epsilon(1e-14));
  const auto& gh = cached_gauss_hermite(64);
  for (double eps : {1.0, 0.1, 0.01}) {
    // substitute y = sqrt(eps) t so the Gaussian matches the rule weight
    const double s = integrate_hermite(gh, [&](double y) {
      const double u = uepsilon_eval(eps, y);
      return u * u;
    }, std::sqrt(eps));
    CHECK(std::abs(s - 1.0) < 1e-12);
  }
}

TEST_CASE("radial basis orthonormality") {
  const double omega = 1.7;
  for (double nu : {0.25, 1.0, 3.5}) {
    const auto& gl = cached_gauss_laguerre(48, nu);
    const auto tw = laguerre_plain_weights(gl);
    // int R_n R_k r dr = (1/omega) int R_n R_k dt with t = omega r^2 / 2
    auto inner = [&](int n, int k) {
      double s = 0.0;
      for (int i = 0; i < gl.order(); ++i) {
        const double r = std::sqrt(2.0 * gl.nodes[i] / omega);
        s += tw[i] * ab_radial_eval(n, nu, omega, r) *
             ab_radial_eval(k, nu, omega, r) / omega;
      }
      return s;
    };
    CHECK(std::abs(inner(0, 0) - 1.0) < 1e-10);
    CHECK(std::abs(inner(2, 2) - 1.0) < 1e-10);
    CHECK(std::abs(inner(0, 1)) < 1e-10);
    CHECK(std::abs(inner(1, 3)) < 1e-10);
  }
}

TEST_CASE("radial basis vanishes at the origin for positive nu") {
  CHECK(ab_radial_eval(0, 0.5, 1.0, 0.0) == 0.0);
  CHECK(ab_radial_eval(3, 1.5, 2.0, 0.0) == 0.0);
}

TEST_CASE("radial eigen-relation against the finite difference oracle") {
  // R_{n,nu} at scale omega solves the isotropic radial problem with
  // eigenvalue omega (2n + nu + 1)
  for (double nu : {0.5, 1.25}) {
    for (double omega : {1.0, 2.0}) {
      const auto fd = ab_radial_oracle(nu, omega, 3);
      for (int n = 0; n < 3; ++n)
        CHECK(std::abs(fd[n] - omega * (2 * n + nu + 1)) < 1e-4 * omega * (2 * n + nu + 1));
    }
  }
}

TEST_CASE("radial derivative against central differences") {
  const double h = 1e-6;
  for (int n : {0, 2}) {
    for (double r : {0.4, 1.1, 2.6}) {
      const double fd =
          (ab_radial_eval(n, 0.75, 1.3, r + h) - ab_radial_eval(n, 0.75, 1.3, r - h)) / (2 * h);
      CHECK(std::abs(ab_radial_deriv(n, 0.75, 1.3, r) - fd) < 1e-6);
    }
  }
}

TEST_CASE("index construction") {
  const auto idx = ABBasisIndex::make(2, -4, 0.5);
  CHECK(idx.n == 2);
  CHECK(idx.m == -4);
  CHECK(idx.nu == doctest::Approx(3.5).epsilon(1e-15));
}

}  // TEST_SUITE
