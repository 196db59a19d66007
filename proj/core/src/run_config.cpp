#include "anyonlab/run_config.hpp"

#include "anyonlab/csv.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace anyonlab {

std::vector<double> parse_eps_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw ConfigError("eps_list: bad number '" + tok + "'");
    }
    if (used != tok.size()) throw ConfigError("eps_list: bad number '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("eps_list: empty");
  return out;
}

void RunConfig::set(const std::string& key, const std::string& value) {
  auto as_double = [&](const char* name) {
    try {
      return std::stod(value);
    } catch (const std::exception&) {
      throw ConfigError(std::string(name) + ": bad number '" + value + "'");
    }
  };
  auto as_int = [&](const char* name) {
    try {
      return std::stoi(value);
    } catch (const std::exception&) {
      throw ConfigError(std::string(name) + ": bad integer '" + value + "'");
    }
  };
  if (key == "alpha") alpha = as_double("alpha");
  else if (key == "epsilon") epsilon = as_double("epsilon");
  else if (key == "eps_list") eps_list = parse_eps_list(value);
  else if (key == "n") n_particles = as_int("n");
  else if (key == "k") k_max = as_int("k");
  else if (key == "nmax") n_max = as_int("nmax");
  else if (key == "mmax") m_max = as_int("mmax");
  else if (key == "omega_b") omega_b = as_double("omega_b");
  else if (key == "order") quad_order = as_int("order");
  else if (key == "tol") tol = as_double("tol");
  else if (key == "seed") seed = static_cast<std::uint64_t>(std::stoull(value));
  else if (key == "samples") samples = static_cast<std::size_t>(std::stoull(value));
  else if (key == "threads") threads = as_int("threads");
  else if (key == "cache_dir") cache_dir = value;
  else if (key == "out") out_path = value;
  else throw ConfigError("unknown config key '" + key + "'");
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void RunConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 2.0)) throw ConfigError("alpha must be in (0,2)");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw ConfigError("epsilon must be in (0,1]");
  for (double e : eps_list)
    if (!(e > 0.0 && e <= 1.0)) throw ConfigError("eps_list entries must be in (0,1]");
  if (n_particles < 1) throw ConfigError("n must be >= 1");
  if (k_max < 1) throw ConfigError("k must be >= 1");
  if (n_max < 1 || m_max < 1) throw ConfigError("nmax, mmax must be >= 1");
  if (m_max % 2 != 0) throw ConfigError("mmax must be even");
  if (omega_b < 0.0) throw ConfigError("omega_b must be >= 0 (0 selects the default)");
  if (quad_order < 0) throw ConfigError("order must be >= 0");
  if (!(tol > 0.0)) throw ConfigError("tol must be > 0");
  if (samples < 2) throw ConfigError("samples must be >= 2");
  if (threads < 1) throw ConfigError("threads must be >= 1");
}

std::vector<double> RunConfig::effective_eps_list() const {
  if (!eps_list.empty()) return eps_list;
  return {epsilon};
}

std::map<std::string, std::string> RunConfig::to_map() const {
  std::map<std::string, std::string> m;
  m["alpha"] = format_double(alpha);
  m["epsilon"] = format_double(epsilon);
  if (!eps_list.empty()) {
    std::string s;
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
      if (i) s += ',';
      s += format_double(eps_list[i]);
    }
    m["eps_list"] = s;
  }
  m["n"] = std::to_string(n_particles);
  m["k"] = std::to_string(k_max);
  m["nmax"] = std::to_string(n_max);
  m["mmax"] = std::to_string(m_max);
  m["omega_b"] = format_double(omega_b);
  m["order"] = std::to_string(quad_order);
  m["tol"] = format_double(tol);
  m["seed"] = std::to_string(seed);
  m["samples"] = std::to_string(samples);
  m["threads"] = std::to_string(threads);
  m["cache_dir"] = cache_dir;
  m["out"] = out_path;
  return m;
}

}  // namespace anyonlab
