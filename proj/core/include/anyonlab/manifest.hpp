#ifndef ANYONLAB_MANIFEST_HPP
#define ANYONLAB_MANIFEST_HPP

#include <cstdint>
#include <map>
#include <string>

namespace anyonlab {

inline const char* anyonlab_version() { return "0.1.0"; }

// FNV-1a over the file bytes; 0 if the file cannot be read.
std::uint64_t fnv1a_file(const std::string& path);

// JSON run manifest: config echo, tool version, stage timings, flags, and
// a checksum per output file.  Written next to the CSV as <csv>.manifest.json
// (or at an explicit path).
class RunManifest {
 public:
  RunManifest(const std::string& command,
              const std::map<std::string, std::string>& config_echo);

  void add_timing(const std::string& stage, double seconds);
  void add_flag(const std::string& name, bool value);
  void add_value(const std::string& name, double value);
  void add_text(const std::string& name, const std::string& value);
  void add_output(const std::string& path);  // records size + checksum

  void write(const std::string& path) const;

 private:
  std::string command_;
  std::map<std::string, std::string> config_;
  std::map<std::string, double> timings_;
  std::map<std::string, bool> flags_;
  std::map<std::string, double> values_;
  std::map<std::string, std::string> texts_;
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> outputs_;
};

}  // namespace anyonlab

#endif
