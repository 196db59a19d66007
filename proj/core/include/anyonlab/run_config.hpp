#ifndef ANYONLAB_RUN_CONFIG_HPP
#define ANYONLAB_RUN_CONFIG_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace anyonlab {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat run configuration shared by all CLI verbs.  Sources, in order of
// precedence: built-in defaults < config file (key=value lines) < flags.
struct RunConfig {
  double alpha = 1.0;
  double epsilon = 1.0;
  std::vector<double> eps_list;     // empty: single epsilon
  int n_particles = 2;
  int k_max = 6;
  int n_max = 20;
  int m_max = 20;
  double omega_b = 0.0;             // 0: eps^{-1/2} policy
  int quad_order = 0;               // 0: per-module default
  double tol = 1e-10;
  std::uint64_t seed = 20240901;
  std::size_t samples = 1000000;    // Monte Carlo only (config-file key)
  int threads = 1;
  std::string cache_dir;            // default from ANYON_CACHE_DIR
  std::string out_path;             // CSV destination

  // Applies one key=value pair; unknown keys throw ConfigError.
  void set(const std::string& key, const std::string& value);

  // Reads a flat key=value file ('#' comments, blank lines allowed).
  void load_file(const std::string& path);

  // Range checks shared by every verb; throws ConfigError.
  void validate() const;

  std::vector<double> effective_eps_list() const;

  // Serialized echo for the run manifest, stable key order.
  std::map<std::string, std::string> to_map() const;
};

std::vector<double> parse_eps_list(const std::string& csv);

}  // namespace anyonlab

#endif
