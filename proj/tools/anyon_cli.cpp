// anyon_cli: command-line surface for the trapped-anyon dimensional
// reduction experiments.  Verbs: tg, spectrum2d, sweep, overlap, hardy,
// decoupling, calogero.  Every CSV output gets a JSON manifest beside it.
//
// Exit codes: 0 success, 2 validation, 3 numerical non-convergence, 4 I/O.

#include "anyonlab/calogero.hpp"
#include "anyonlab/csv.hpp"
#include "anyonlab/energy_functionals.hpp"
#include "anyonlab/experiments.hpp"
#include "anyonlab/hardy.hpp"
#include "anyonlab/manifest.hpp"
#include "anyonlab/run_config.hpp"
#include "anyonlab/tonks_girardeau.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace anyonlab;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNonConvergence = 3;
constexpr int kExitIo = 4;

struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string config;
  std::optional<double> alpha, epsilon, omega_b, tol;
  std::optional<std::string> eps_list, cache_dir, out;
  std::optional<int> n, k, nmax, mmax, order, threads;
  std::optional<std::uint64_t> seed;
};

void add_common_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "key=value config file; flags win");
  cmd->add_option("--alpha", f.alpha, "statistics parameter in (0,2)");
  cmd->add_option("--epsilon", f.epsilon, "anisotropy in (0,1]");
  cmd->add_option("--eps-list", f.eps_list, "comma-separated epsilon ladder");
  cmd->add_option("--n", f.n, "particle count");
  cmd->add_option("--k", f.k, "number of levels / rows");
  cmd->add_option("--nmax", f.nmax, "radial truncation");
  cmd->add_option("--mmax", f.mmax, "angular truncation (even)");
  cmd->add_option("--omega-b", f.omega_b, "basis scale; 0 = eps^(-1/2)");
  cmd->add_option("--order", f.order, "quadrature order override");
  cmd->add_option("--tol", f.tol, "eigensolver tolerance");
  cmd->add_option("--seed", f.seed, "Monte Carlo seed");
  cmd->add_option("--threads", f.threads, "worker threads (1 = deterministic)");
  cmd->add_option("--cache-dir", f.cache_dir,
                  "matrix cache directory (default $ANYON_CACHE_DIR)");
  cmd->add_option("--out", f.out, "output CSV path");
}

RunConfig resolve(const Flags& f) {
  RunConfig cfg;
  if (const char* env = std::getenv("ANYON_CACHE_DIR")) cfg.cache_dir = env;
  if (!f.config.empty()) cfg.load_file(f.config);
  if (f.alpha) cfg.alpha = *f.alpha;
  if (f.epsilon) cfg.epsilon = *f.epsilon;
  if (f.eps_list) cfg.eps_list = parse_eps_list(*f.eps_list);
  if (f.n) cfg.n_particles = *f.n;
  if (f.k) cfg.k_max = *f.k;
  if (f.nmax) cfg.n_max = *f.nmax;
  if (f.mmax) cfg.m_max = *f.mmax;
  if (f.omega_b) cfg.omega_b = *f.omega_b;
  if (f.order) cfg.quad_order = *f.order;
  if (f.tol) cfg.tol = *f.tol;
  if (f.seed) cfg.seed = *f.seed;
  if (f.threads) cfg.threads = *f.threads;
  if (f.cache_dir) cfg.cache_dir = *f.cache_dir;
  if (f.out) cfg.out_path = *f.out;
  cfg.validate();
  return cfg;
}

std::string out_or(const RunConfig& cfg, const char* fallback) {
  return cfg.out_path.empty() ? fallback : cfg.out_path;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

SweepOptions sweep_options(const RunConfig& cfg) {
  SweepOptions o;
  o.n_max = cfg.n_max;
  o.m_max = cfg.m_max;
  o.omega_b = cfg.omega_b;
  o.quad_order = cfg.quad_order;
  o.lanczos_tol = cfg.tol;
  o.cache_dir = cfg.cache_dir;
  o.threads = cfg.threads;
  return o;
}

const std::vector<double> kDefaultLadder = {1.0, 0.5, 0.2, 0.1, 0.05, 0.02};

std::string bool_field(bool b) { return b ? "1" : "0"; }

int cmd_tg(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto levels = tg_levels(cfg.n_particles, cfg.k_max);
  const std::string path = out_or(cfg, "tg.csv");
  CsvWriter csv(path, {"k", "energy", "orbitals"});
  for (std::size_t i = 0; i < levels.size(); ++i) {
    std::string orbs;
    for (std::size_t j = 0; j < levels[i].orbitals.orbitals.size(); ++j) {
      if (j) orbs += ';';
      orbs += std::to_string(levels[i].orbitals.orbitals[j]);
    }
    csv.row({std::to_string(i + 1), format_double(levels[i].energy), orbs});
  }
  csv.close();
  RunManifest man("tg", cfg.to_map());
  man.add_timing("total", seconds_since(t0));
  man.add_output(path);
  man.write(path + ".manifest.json");
  return kExitOk;
}

int cmd_spectrum2d(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.n_particles != 2)
    throw ConfigError("spectrum2d: only n=2 is implemented");
  TwoAnyonSolveOptions opt;
  opt.n_max = cfg.n_max;
  opt.m_max = cfg.m_max;
  opt.omega_b = cfg.omega_b;
  opt.quad_order = cfg.quad_order;
  opt.lanczos_tol = cfg.tol;
  opt.cache_dir = cfg.cache_dir;
  const auto spec = two_anyon_spectrum(cfg.alpha, cfg.epsilon, cfg.k_max, opt);

  const std::string path = out_or(cfg, "spectrum2d.csv");
  CsvWriter csv(path, {"k", "lambda2d", "cm_p", "cm_q", "rel_idx", "rel_value",
                       "converged"});
  bool all_solver_ok = true;
  for (int k = 1; k <= cfg.k_max; ++k) {
    const auto& lv = spec.levels[k - 1];
    all_solver_ok = all_solver_ok && spec.relative.converged[lv.rel_idx];
    csv.row({std::to_string(k), format_double(lv.lambda), std::to_string(lv.cm_p),
             std::to_string(lv.cm_q), std::to_string(lv.rel_idx),
             format_double(lv.rel_value), bool_field(lv.converged)});
  }
  csv.close();
  RunManifest man("spectrum2d", cfg.to_map());
  man.add_timing("total", seconds_since(t0));
  man.add_flag("cache_hit", spec.cache_hit);
  man.add_flag("solver_converged", all_solver_ok);
  man.add_output(path);
  man.write(path + ".manifest.json");
  if (!all_solver_ok) throw NonConvergence("spectrum2d: eigensolver not converged");
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto eps = cfg.eps_list.empty() ? kDefaultLadder : cfg.eps_list;
  const auto rows = epsilon_sweep(cfg.alpha, eps, cfg.k_max, sweep_options(cfg));
  const std::string path = out_or(cfg, "sweep.csv");
  CsvWriter csv(path, {"alpha", "epsilon", "k", "lambda2d", "gap", "lambda1d",
                       "residual", "cm_p", "cm_q", "rel_idx", "converged"});
  for (const auto& r : rows)
    csv.row({format_double(r.alpha), format_double(r.epsilon), std::to_string(r.k),
             format_double(r.lambda2d), format_double(r.gap),
             format_double(r.lambda1d), format_double(r.residual),
             std::to_string(r.cm_p), std::to_string(r.cm_q),
             std::to_string(r.rel_idx), bool_field(r.converged)});
  csv.close();
  RunManifest man("sweep", cfg.to_map());
  man.add_timing("total", seconds_since(t0));
  man.add_output(path);
  man.write(path + ".manifest.json");
  return kExitOk;
}

int cmd_overlap(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto eps = cfg.eps_list.empty() ? kDefaultLadder : cfg.eps_list;
  OverlapOptions opt;
  static_cast<SweepOptions&>(opt) = sweep_options(cfg);
  const auto rows = overlap_study(cfg.alpha, eps, cfg.k_max, opt);
  const std::string path = out_or(cfg, "overlap.csv");
  CsvWriter csv(path, {"alpha", "epsilon", "k", "overlap", "l2_dist",
                       "h1_dist_diag"});
  RunManifest man("overlap", cfg.to_map());
  for (const auto& r : rows) {
    csv.row({format_double(r.alpha), format_double(r.epsilon), std::to_string(r.k),
             format_double(r.overlap), format_double(r.l2_dist),
             format_double(r.h1_dist_diag)});
    std::ostringstream key;
    key << "nophase_eps" << format_double(r.epsilon) << "_k" << r.k;
    man.add_value(key.str(), r.overlap_nophase);
  }
  csv.close();
  man.add_timing("total", seconds_since(t0));
  man.add_output(path);
  man.write(path + ".manifest.json");
  return kExitOk;
}

int cmd_hardy(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.n_particles != 2 && cfg.n_particles != 3)
    throw ConfigError("hardy: n must be 2 or 3");
  const std::string path = out_or(cfg, "hardy.csv");
  CsvWriter csv(path, {"kind", "n", "alpha", "estimate", "stderr", "bound",
                       "samples", "seed", "flagged"});
  RunManifest man("hardy", cfg.to_map());

  HardyTrial trial;
  trial.n_particles = cfg.n_particles;
  trial.alpha = cfg.alpha;
  const auto mc = hardy_quotient_mc(trial, cfg.samples, cfg.seed);
  const double bound = many_anyon_hardy_constant(cfg.n_particles, cfg.alpha);
  csv.row({"magnetic_quotient", std::to_string(cfg.n_particles),
           format_double(cfg.alpha), format_double(mc.estimate),
           format_double(mc.stderr_est), format_double(bound),
           std::to_string(mc.samples), std::to_string(mc.seed),
           bool_field(mc.flagged)});
  bool flagged = mc.flagged;
  if (cfg.n_particles == 3) {
    const auto mc3 = three_particle_hardy_mc(1.0, cfg.samples, cfg.seed + 1);
    csv.row({"distance_quotient", "3", format_double(cfg.alpha),
             format_double(mc3.estimate), format_double(mc3.stderr_est),
             format_double(3.0), std::to_string(mc3.samples),
             std::to_string(mc3.seed), bool_field(mc3.flagged)});
    flagged = flagged || mc3.flagged;
  }
  csv.close();
  man.add_timing("total", seconds_since(t0));
  man.add_flag("stderr_flagged", flagged);
  man.add_output(path);
  man.write(path + ".manifest.json");
  return kExitOk;
}

int cmd_decoupling(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.n_particles != 2)
    throw ConfigError("decoupling: only n=2 tensor quadrature is implemented");
  const int order = cfg.quad_order > 0 ? cfg.quad_order : 40;
  const auto eps = cfg.effective_eps_list();
  const auto states = tg_levels(2, 2);
  const std::string path = out_or(cfg, "decoupling.csv");
  CsvWriter csv(path, {"alpha", "epsilon", "state", "e2d", "lambda1d", "expected",
                       "deviation", "pass"});
  bool all_pass = true;
  for (double e : eps)
    for (std::size_t s = 0; s < states.size(); ++s) {
      TrialState2D t{states[s], cfg.alpha, e};
      const double e2d = energy2d_trial(t, order);
      const double expected = states[s].energy + 2.0 / e;
      const double dev = std::abs(e2d - expected);
      const bool pass = dev < 1e-6 * (1.0 + 2.0 / e);
      all_pass = all_pass && pass;
      csv.row({format_double(cfg.alpha), format_double(e), std::to_string(s + 1),
               format_double(e2d), format_double(states[s].energy),
               format_double(expected), format_double(dev), bool_field(pass)});
    }
  csv.close();
  RunManifest man("decoupling", cfg.to_map());
  man.add_timing("total", seconds_since(t0));
  man.add_flag("identity_pass", all_pass);
  man.add_output(path);
  man.write(path + ".manifest.json");
  if (!all_pass) throw NonConvergence("decoupling: identity check failed");
  return kExitOk;
}

int cmd_calogero(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  CalogeroParams p{cfg.alpha};
  const auto levels = calogero_n2_levels(p, cfg.k_max);
  const std::string path = out_or(cfg, "calogero.csv");
  CsvWriter csv(path, {"k", "energy"});
  for (std::size_t i = 0; i < levels.size(); ++i)
    csv.row({std::to_string(i + 1), format_double(levels[i])});
  csv.close();
  RunManifest man("calogero", cfg.to_map());
  man.add_timing("total", seconds_since(t0));
  man.add_value("ground_minus_tg_ground", calogero_vs_tg_gap(cfg.alpha));
  man.add_output(path);
  man.write(path + ".manifest.json");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"few-anyon spectral experiments"};
  app.require_subcommand(1);

  struct Verb {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&);
  };
  const Verb verbs[] = {
      {"tg", "1D impenetrable-gas levels", cmd_tg},
      {"spectrum2d", "two-anyon levels in the anisotropic trap", cmd_spectrum2d},
      {"sweep", "gap ladder over epsilon (sweep.csv)", cmd_sweep},
      {"overlap", "ansatz overlap study (overlap.csv)", cmd_overlap},
      {"hardy", "Monte Carlo Hardy quotients", cmd_hardy},
      {"decoupling", "dressed-ansatz energy identity check", cmd_decoupling},
      {"calogero", "competing inverse-square model levels", cmd_calogero},
  };

  std::vector<Flags> flags(std::size(verbs));
  std::vector<CLI::App*> cmds(std::size(verbs));
  for (std::size_t i = 0; i < std::size(verbs); ++i) {
    cmds[i] = app.add_subcommand(verbs[i].name, verbs[i].help);
    add_common_flags(cmds[i], flags[i]);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  for (std::size_t i = 0; i < std::size(verbs); ++i) {
    if (!cmds[i]->parsed()) continue;
    try {
      return verbs[i].run(resolve(flags[i]));
    } catch (const ConfigError& e) {
      std::cerr << "error: validation: " << e.what() << '\n';
      return kExitValidation;
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: validation: " << e.what() << '\n';
      return kExitValidation;
    } catch (const NonConvergence& e) {
      std::cerr << "error: non-convergence: " << e.what() << '\n';
      return kExitNonConvergence;
    } catch (const IoFailure& e) {
      std::cerr << "error: io: " << e.what() << '\n';
      return kExitIo;
    } catch (const std::runtime_error& e) {
      // csv/manifest open failures surface here
      const std::string what = e.what();
      const bool io = what.rfind("csv:", 0) == 0 || what.rfind("manifest:", 0) == 0;
      std::cerr << "error: " << (io ? "io: " : "runtime: ") << what << '\n';
      return io ? kExitIo : kExitNonConvergence;
    }
  }
  return kExitValidation;
}
