#include <doctest.h>

#include "anyonlab/csv.hpp"
#include "anyonlab/experiments.hpp"
#include "anyonlab/manifest.hpp"
#include "anyonlab/run_config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace anyonlab;

namespace {

SweepOptions fast_options() {
  SweepOptions opt;
  opt.n_max = 12;
  opt.m_max = 12;
  opt.refine_check = false;
  return opt;
}

}  // namespace

TEST_SUITE("experiments") {

TEST_CASE("sweep rows carry the defining identities") {
  const std::vector<double> ladder{1.0, 0.5, 0.2};
  const auto rows = epsilon_sweep(1.0, ladder, 2, fast_options());
  REQUIRE(rows.size() == 6);
  std::size_t i = 0;
  for (double eps : ladder) {
    for (int k = 1; k <= 2; ++k, ++i) {
      const auto& r = rows[i];
      CHECK(r.epsilon == eps);
      CHECK(r.k == k);
      CHECK(r.gap == doctest::Approx(r.lambda2d - 2.0 / eps).epsilon(1e-14));
      CHECK(r.residual == doctest::Approx(r.gap - r.lambda1d).epsilon(1e-12));
      // loose ceiling only: refine_check is off here, so the flag does not
      // certify truncation convergence
      if (r.converged) CHECK(r.residual <= 1e-4);
    }
    // k-ordering within one epsilon
    CHECK(rows[i - 1].lambda2d >= rows[i - 2].lambda2d);
  }
  CHECK(rows[0].lambda1d == 4.0);
  CHECK(rows[1].lambda1d == 6.0);
}

TEST_CASE("sweep rejects a non decreasing ladder") {
  CHECK_THROWS(epsilon_sweep(1.0, {0.5, 1.0}, 1, fast_options()));
  CHECK_THROWS(epsilon_sweep(1.0, {1.0, 0.01}, 1, fast_options()));
}

TEST_CASE("overlap rows stay inside the unit interval") {
  OverlapOptions opt;
  static_cast<SweepOptions&>(opt) = fast_options();
  opt.quad_order_overlap = 48;
  const auto rows = overlap_study(1.0, {1.0, 0.5}, 1, opt);
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) {
    CHECK(r.overlap >= 0.0);
    CHECK(r.overlap <= 1.0 + 1e-10);
    CHECK(r.overlap_nophase >= 0.0);
    CHECK(r.overlap_nophase <= 1.0 + 1e-10);
    CHECK(r.l2_dist >= 0.0);
  }
  // the theorem is asymptotic: the isotropic point is strictly below 1
  CHECK(rows[0].overlap < 1.0);
  // dropping the gauge phase can only lose overlap
  CHECK(rows[0].overlap_nophase < rows[0].overlap);
}

TEST_CASE("projected function is symmetric and normalized") {
  OverlapOptions opt;
  static_cast<SweepOptions&>(opt) = fast_options();
  opt.quad_order_overlap = 48;
  const auto phi = project_phi_eps(1.0, 0.5, 1, opt, 41, 3.5);
  REQUIRE(phi.grid.size() == 41);
  double asym = 0.0;
  for (std::size_t i = 0; i < phi.grid.size(); ++i)
    for (std::size_t j = 0; j < phi.grid.size(); ++j)
      asym = std::max(asym, std::abs(phi.values[i][j] - phi.values[j][i]));
  CHECK(asym < 1e-10);
  CHECK(phi.norm == doctest::Approx(1.0).epsilon(0.05));
  CHECK(phi.l2_dist < 0.05);
  // alpha = 1 is the free-fermion point: the projection vanishes on the
  // diagonal at any epsilon
  CHECK(phi.diag_max < 1e-10);
}

TEST_CASE("truncation scaling policy") {
  SweepOptions opt;
  opt.n_max = 10;
  opt.m_max = 10;
  const auto at1 = opt.solve_options(1.0);
  CHECK(at1.n_max == 10);
  CHECK(at1.m_max == 10);
  const auto at002 = opt.solve_options(0.02);
  CHECK(at002.n_max > 30);
  CHECK(at002.m_max % 2 == 0);
  opt.scale_truncation = false;
  CHECK(opt.solve_options(0.02).n_max == 10);
}

TEST_CASE("run config parsing and validation") {
  RunConfig cfg;
  cfg.set("alpha", "0.75");
  cfg.set("eps_list", "1,0.5,0.1");
  cfg.set("k", "3");
  cfg.set("seed", "42");
  CHECK(cfg.alpha == 0.75);
  CHECK(cfg.k_max == 3);
  CHECK(cfg.seed == 42);
  REQUIRE(cfg.eps_list.size() == 3);
  CHECK(cfg.eps_list[1] == 0.5);
  CHECK_NOTHROW(cfg.validate());

  CHECK_THROWS_AS(cfg.set("bogus", "1"), ConfigError);
  CHECK_THROWS_AS(cfg.set("alpha", "abc"), ConfigError);
  cfg.alpha = 2.5;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.alpha = 1.0;
  cfg.m_max = 7;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("run config file round trip") {
  const auto path = std::filesystem::temp_directory_path() / "anyonlab_cfg_test.cfg";
  {
    std::ofstream f(path);
    f << "# comment line\n";
    f << "alpha = 1.25\n";
    f << "epsilon=0.2\n\n";
    f << "out = /tmp/x.csv\n";
  }
  RunConfig cfg;
  cfg.load_file(path.string());
  CHECK(cfg.alpha == 1.25);
  CHECK(cfg.epsilon == 0.2);
  CHECK(cfg.out_path == "/tmp/x.csv");
  CHECK(cfg.to_map().at("alpha") == format_double(1.25));
  std::filesystem::remove(path);

  RunConfig missing;
  CHECK_THROWS_AS(missing.load_file("/nonexistent/anyonlab.cfg"), ConfigError);
}

TEST_CASE("effective ladder prefers the explicit list") {
  RunConfig cfg;
  cfg.epsilon = 0.3;
  CHECK(cfg.effective_eps_list() == std::vector<double>{0.3});
  cfg.eps_list = {1.0, 0.5};
  CHECK(cfg.effective_eps_list() == cfg.eps_list);
  CHECK(parse_eps_list("1,0.5,0.02") == std::vector<double>{1.0, 0.5, 0.02});
}

TEST_CASE("csv formatting is shortest exact") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(4.0) == "4");
  const double v = 3.8655383556728964;
  CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("csv writer emits lf only") {
  const auto path = std::filesystem::temp_directory_path() / "anyonlab_csv_test.csv";
  {
    CsvWriter w(path.string(), {"a", "b"});
    w.row({"1", "2.5"});
    w.close();
  }
  std::ifstream f(path, std::ios::binary);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == "a,b\n1,2.5\n");
  std::filesystem::remove(path);
}

TEST_CASE("manifest writes valid json with checksums") {
  const auto dir = std::filesystem::temp_directory_path() / "anyonlab_manifest_test";
  std::filesystem::create_directories(dir);
  const auto csv = (dir / "out.csv").string();
  {
    std::ofstream f(csv, std::ios::binary);
    f << "x\n1\n";
  }
  RunManifest man("test", {{"alpha", "1"}});
  man.add_timing("solve", 0.25);
  man.add_flag("converged", true);
  man.add_value("gap", 3.5);
  man.add_output(csv);
  const auto mpath = csv + ".manifest.json";
  man.write(mpath);

  std::ifstream f(mpath);
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string text = buf.str();
  CHECK(text.find("\"alpha\"") != std::string::npos);
  CHECK(text.find("\"version\"") != std::string::npos);
  CHECK(text.find(std::to_string(fnv1a_file(csv))) != std::string::npos);
  CHECK(fnv1a_file(csv) != 0);
  CHECK(fnv1a_file((dir / "missing").string()) == 0);
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
