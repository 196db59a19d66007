#include <doctest.h>

#include "anyonlab/anyon2d.hpp"
#include "anyonlab/oscillator_basis.hpp"
#include "anyonlab/radial_fd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <filesystem>
#include <vector>

using namespace anyonlab;

namespace {

// k smallest isotropic levels (2p+1) + (2q+1) + 2(2n + |m+alpha| + 1),
// m even, by bounded enumeration.
std::vector<double> isotropic_levels(double alpha, int k) {
  std::vector<double> vals;
  for (int p = 0; p <= k; ++p)
    for (int q = 0; q <= k; ++q)
      for (int n = 0; n <= k; ++n)
        for (int m = -2 * k; m <= 2 * k; m += 2)
          vals.push_back(2.0 * p + 1.0 + 2.0 * q + 1.0 +
                         2.0 * (2.0 * n + std::abs(m + alpha) + 1.0));
  std::sort(vals.begin(), vals.end());
  vals.resize(k);
  return vals;
}

// Composite Simpson value of int R_{n,nu} r^2 R_{n',nu'} r dr.
double simpson_r2(int n, double nu, int np, double nup, double omega) {
  const int intervals = 8000;
  const double rmax = 12.0;
  const double h = rmax / intervals;
  auto f = [&](double r) {
    return ab_radial_eval(n, nu, omega, r) * r * r * ab_radial_eval(np, nup, omega, r) * r;
  };
  double acc = f(0.0) + f(rmax);
  for (int i = 1; i < intervals; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return acc * h / 3.0;
}

}  // namespace

TEST_SUITE("anyon2d") {

TEST_CASE("isotropic assembly is the closed form diagonal") {
  RelativeProblem p;
  p.alpha = 0.75;
  p.epsilon = 1.0;
  p.omega_b = 1.0;
  p.n_max = 6;
  p.m_max = 6;
  const auto m = assemble_relative(p);
  const Eigen::MatrixXd d = m.dense();
  CHECK((d - d.transpose()).cwiseAbs().maxCoeff() == 0.0);
  Eigen::MatrixXd expect = Eigen::MatrixXd::Zero(p.dimension(), p.dimension());
  for (int mm = -p.m_max; mm <= p.m_max; mm += 2)
    for (int n = 0; n <= p.n_max; ++n) {
      const int i = p.basis_index(n, mm);
      expect(i, i) = 2.0 * (2.0 * n + std::abs(mm + p.alpha) + 1.0);
    }
  CHECK((d - expect).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("anisotropic assembly against a quadrature-free oracle") {
  RelativeProblem p;
  p.alpha = 0.5;
  p.epsilon = 0.5;
  p.omega_b = default_omega_b(p.epsilon);
  p.n_max = 2;
  p.m_max = 2;
  const auto m = assemble_relative(p);
  const Eigen::MatrixXd d = m.dense();

  const double w = p.omega_b;
  const double inv_e2 = 1.0 / (p.epsilon * p.epsilon);
  const double c_iso = 0.5 - 0.5 * w * w + 0.25 * (inv_e2 - 1.0);
  const double c_cos = -0.25 * (inv_e2 - 1.0);
  Eigen::MatrixXd expect = Eigen::MatrixXd::Zero(p.dimension(), p.dimension());
  for (int ma = -p.m_max; ma <= p.m_max; ma += 2)
    for (int mb = -p.m_max; mb <= p.m_max; mb += 2) {
      const double nua = std::abs(ma + p.alpha);
      const double nub = std::abs(mb + p.alpha);
      for (int na = 0; na <= p.n_max; ++na)
        for (int nb = 0; nb <= p.n_max; ++nb) {
          double v = 0.0;
          if (ma == mb) {
            if (na == nb) v += 2.0 * w * (2.0 * na + nua + 1.0);
            v += c_iso * simpson_r2(na, nua, nb, nub, w);
          } else if (std::abs(ma - mb) == 2) {
            // angular integral of cos(2 theta) e^{i(mb-ma) theta} is 1/2
            v += 0.5 * c_cos * simpson_r2(na, nua, nb, nub, w);
          }
          expect(p.basis_index(na, ma), p.basis_index(nb, mb)) = v;
        }
    }
  CHECK((d - expect).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("isotropic spectrum is exact for the lowest ten levels") {
  for (double alpha : {0.25, 0.5, 1.0, 1.5}) {
    TwoAnyonSolveOptions opt;
    opt.n_max = 14;
    opt.m_max = 14;
    opt.refine_check = false;
    const auto spec = two_anyon_spectrum(alpha, 1.0, 10, opt);
    const auto exact = isotropic_levels(alpha, 10);
    for (int i = 0; i < 10; ++i)
      CHECK(std::abs(spec.levels[i].lambda - exact[i]) < 1e-8);
  }
}

TEST_CASE("ground level example") {
  TwoAnyonSolveOptions opt;
  opt.refine_check = false;
  const auto spec = two_anyon_spectrum(0.5, 1.0, 1, opt);
  CHECK(std::abs(spec.levels[0].lambda - 5.0) < 1e-8);
  CHECK(spec.levels[0].cm_p == 0);
  CHECK(spec.levels[0].cm_q == 0);
}

TEST_CASE("relative levels against the finite difference oracle") {
  TwoAnyonSolveOptions opt;
  opt.n_max = 12;
  opt.m_max = 12;
  opt.refine_check = false;
  for (double alpha : {0.5, 1.25}) {
    const auto spec = two_anyon_spectrum(alpha, 1.0, 1, opt);
    // channel-wise oracle: eigenvalues 2(2n + |m+alpha| + 1) per even m
    std::vector<double> channels;
    for (int m = -4; m <= 4; m += 2) {
      const auto fd = ab_radial_oracle(std::abs(m + alpha), 2.0, 2);
      channels.insert(channels.end(), fd.begin(), fd.end());
    }
    std::sort(channels.begin(), channels.end());
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(spec.relative.eigenvalues[i] - channels[i]) < 1e-4);
  }
}

TEST_CASE("galerkin values are variational upper bounds") {
  TwoAnyonSolveOptions coarse;
  coarse.n_max = 10;
  coarse.m_max = 10;
  coarse.refine_check = false;
  TwoAnyonSolveOptions fine = coarse;
  fine.n_max = 20;
  fine.m_max = 20;
  const auto a = two_anyon_spectrum(0.7, 0.2, 3, coarse);
  const auto b = two_anyon_spectrum(0.7, 0.2, 3, fine);
  for (int i = 0; i < 3; ++i)
    CHECK(b.levels[i].lambda <= a.levels[i].lambda + 1e-10);
}

TEST_CASE("upper bound against the 1d limit") {
  TwoAnyonSolveOptions opt;
  opt.n_max = 30;
  opt.m_max = 30;
  opt.refine_check = false;
  for (double eps : {1.0, 0.5, 0.2}) {
    const auto spec = two_anyon_spectrum(1.0, eps, 1, opt);
    CHECK(spec.levels[0].lambda <= 2.0 / eps + 4.0 + 1e-6);
  }
}

TEST_CASE("disk cache is hit on the second solve") {
  const auto dir = std::filesystem::temp_directory_path() / "anyonlab_a2d_cache";
  std::filesystem::remove_all(dir);
  TwoAnyonSolveOptions opt;
  opt.n_max = 8;
  opt.m_max = 8;
  opt.refine_check = false;
  opt.cache_dir = dir.string();
  const auto first = two_anyon_spectrum(0.9, 0.5, 2, opt);
  CHECK_FALSE(first.cache_hit);
  const auto second = two_anyon_spectrum(0.9, 0.5, 2, opt);
  CHECK(second.cache_hit);
  for (int i = 0; i < 2; ++i)
    CHECK(first.levels[i].lambda == second.levels[i].lambda);
  std::filesystem::remove_all(dir);
}

TEST_CASE("problem validation") {
  RelativeProblem p;
  p.alpha = 2.5;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.alpha = 1.0;
  p.m_max = 7;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.m_max = 8;
  p.epsilon = 1.5;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  CHECK_THROWS_AS(two_anyon_spectrum(1.0, 1.0, 0, {}), std::invalid_argument);
}

TEST_CASE("relative wavefunction reconstruction is consistent") {
  TwoAnyonSolveOptions opt;
  opt.n_max = 10;
  opt.m_max = 10;
  opt.refine_check = false;
  const auto spec = two_anyon_spectrum(1.0, 1.0, 1, opt);
  // even-m basis: phi(-r) = phi(r), so the modulus is pi-periodic in theta
  const auto& c = spec.relative.eigenvectors[0];
  const auto v1 = relative_wavefunction(spec.problem, c, 1.0, 0.3);
  const auto v2 = relative_wavefunction(spec.problem, c, 1.0, 0.3 + 3.14159265358979323846);
  CHECK(std::abs(std::abs(v1) - std::abs(v2)) < 1e-10);
}

}  // TEST_SUITE
