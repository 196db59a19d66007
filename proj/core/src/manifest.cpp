#include "anyonlab/manifest.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace anyonlab {

std::uint64_t fnv1a_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return 0;
  std::uint64_t h = 0xcbf29ce484222325ull;
  char buf[4096];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ull;
    }
  }
  return h;
}

RunManifest::RunManifest(const std::string& command,
                         const std::map<std::string, std::string>& config_echo)
    : command_(command), config_(config_echo) {}

void RunManifest::add_timing(const std::string& stage, double seconds) {
  timings_[stage] = seconds;
}
void RunManifest::add_flag(const std::string& name, bool value) {
  flags_[name] = value;
}
void RunManifest::add_value(const std::string& name, double value) {
  values_[name] = value;
}
void RunManifest::add_text(const std::string& name, const std::string& value) {
  texts_[name] = value;
}
void RunManifest::add_output(const std::string& path) {
  std::uint64_t size = 0;
  std::error_code ec;
  const auto s = std::filesystem::file_size(path, ec);
  if (!ec) size = s;
  outputs_[path] = {size, fnv1a_file(path)};
}

void RunManifest::write(const std::string& path) const {
  nlohmann::ordered_json j;
  j["tool"] = "anyon_cli";
  j["version"] = anyonlab_version();
  j["command"] = command_;
  j["config"] = config_;
  if (!timings_.empty()) j["timings_s"] = timings_;
  if (!flags_.empty()) j["flags"] = flags_;
  if (!values_.empty()) j["values"] = values_;
  if (!texts_.empty()) j["notes"] = texts_;
  if (!outputs_.empty()) {
    auto& files = j["outputs"];
    for (const auto& [p, meta] : outputs_) {
      files[p] = {{"bytes", meta.first},
                  {"fnv1a", meta.second}};
    }
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("manifest: cannot open '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace anyonlab
