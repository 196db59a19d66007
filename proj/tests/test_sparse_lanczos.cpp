#include <doctest.h>

#include "anyonlab/lanczos.hpp"
#include "anyonlab/manifest.hpp"
#include "anyonlab/sparse_symmetric.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <vector>

using namespace anyonlab;

namespace {

SparseSymmetric random_spd(int dim, std::uint64_t seed, double shift) {
  std::uint64_t s = seed;
  auto next = [&]() {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return static_cast<double>((s * 0x2545F4914F6CDD1Dull) >> 11) / 9007199254740992.0 - 0.5;
  };
  std::vector<Triplet> trips;
  for (int i = 0; i < dim; ++i) {
    trips.push_back({i, i, shift + next()});
    for (int j = i + 1; j < dim; ++j)
      if (next() > 0.45) trips.push_back({i, j, 0.3 * next()});
  }
  return SparseSymmetric(dim, std::move(trips), AssemblyMeta{});
}

}  // namespace

TEST_SUITE("sparse_lanczos") {

TEST_CASE("multiply agrees with the dense image") {
  const auto m = random_spd(60, 7, 2.0);
  const Eigen::MatrixXd d = m.dense();
  CHECK((d - d.transpose()).cwiseAbs().maxCoeff() == 0.0);
  std::uint64_t s = 99;
  Eigen::VectorXd x(60);
  for (int i = 0; i < 60; ++i) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    x[i] = static_cast<double>(s >> 40);
  }
  const Eigen::VectorXd y = m * x;
  CHECK((y - d * x).cwiseAbs().maxCoeff() < 1e-9 * y.cwiseAbs().maxCoeff());
}

TEST_CASE("diagonal matrix recovers the smallest entries") {
  std::vector<Triplet> trips;
  for (int i = 0; i < 100; ++i) trips.push_back({i, i, i + 1.0});
  const SparseSymmetric m(100, std::move(trips), AssemblyMeta{});
  const auto res = lanczos_smallest(m, 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(res.eigenvalues[i] == doctest::Approx(i + 1.0).epsilon(1e-12));
    CHECK(res.residuals[i] < 1e-10);
    CHECK(res.converged[i]);
  }
}

TEST_CASE("random matrix against the dense oracle") {
  const auto m = random_spd(200, 12345, 8.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.dense());
  const auto res = lanczos_smallest(m, 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(std::abs(res.eigenvalues[i] - es.eigenvalues()[i]) < 1e-9);
    CHECK(res.converged[i]);
    // Rayleigh residual of the returned vector
    Eigen::VectorXd mx;
    m.multiply(res.eigenvectors[i], mx);
    CHECK((mx - res.eigenvalues[i] * res.eigenvectors[i]).norm() < 1e-8);
  }
  for (int i = 1; i < 6; ++i) CHECK(res.eigenvalues[i] >= res.eigenvalues[i - 1]);
}

TEST_CASE("shift invert reproduces the direct solve") {
  const auto m = random_spd(150, 777, 9.0);  // diagonally dominant, positive
  const auto direct = lanczos_smallest(m, 4);
  LanczosOptions opt;
  opt.shift_invert = true;
  opt.shift = 0.0;
  const auto inverted = lanczos_smallest(m, 4, opt);
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(direct.eigenvalues[i] - inverted.eigenvalues[i]) < 1e-9);
    CHECK(inverted.converged[i]);
  }
  CHECK(inverted.iterations <= direct.iterations);
}

TEST_CASE("argument validation") {
  const auto m = random_spd(10, 3, 2.0);
  CHECK_THROWS_AS(lanczos_smallest(m, 0), std::invalid_argument);
  CHECK_THROWS_AS(lanczos_smallest(m, 10), std::invalid_argument);
}

TEST_CASE("matrix cache round trip is byte identical") {
  const auto dir = std::filesystem::temp_directory_path() / "anyonlab_cache_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);

  AssemblyMeta meta{0.5, 0.25, 2.0, 8, 8, 16};
  std::vector<Triplet> trips{{0, 0, 1.5}, {0, 2, -0.25}, {1, 1, 3.0}, {2, 2, 0.125}};
  const SparseSymmetric m(3, trips, meta);

  const auto p1 = (dir / "a.bin").string();
  const auto p2 = (dir / "b.bin").string();
  REQUIRE(save_matrix_cache(p1, m));
  REQUIRE(save_matrix_cache(p2, m));
  CHECK(fnv1a_file(p1) == fnv1a_file(p2));

  SparseSymmetric loaded;
  REQUIRE(load_matrix_cache(p1, meta, loaded));
  CHECK(loaded.dimension() == 3);
  REQUIRE(loaded.entries().size() == trips.size());
  for (std::size_t i = 0; i < trips.size(); ++i) {
    CHECK(loaded.entries()[i].row == trips[i].row);
    CHECK(loaded.entries()[i].col == trips[i].col);
    CHECK(loaded.entries()[i].value == trips[i].value);
  }

  // metadata mismatch must refuse the cached file
  AssemblyMeta other = meta;
  other.alpha = 0.75;
  SparseSymmetric reject;
  CHECK_FALSE(load_matrix_cache(p1, other, reject));
  CHECK_FALSE(load_matrix_cache((dir / "missing.bin").string(), meta, reject));

  std::filesystem::remove_all(dir);
}

TEST_CASE("cache filename is injective in the metadata") {
  AssemblyMeta a{0.5, 0.25, 2.0, 8, 8, 16};
  AssemblyMeta b = a;
  b.m_max = 10;
  CHECK(matrix_cache_filename(a) != matrix_cache_filename(b));
  CHECK(matrix_cache_filename(a) == matrix_cache_filename(a));
}

}  // TEST_SUITE
