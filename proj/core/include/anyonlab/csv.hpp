#ifndef ANYONLAB_CSV_HPP
#define ANYONLAB_CSV_HPP

#include <fstream>
#include <string>
#include <vector>

namespace anyonlab {

// Shortest 17-significant-digit decimal form, '.' separator, locale-free.
std::string format_double(double v);

// Deterministic CSV emitter: LF line endings, no quoting (fields are
// numeric or plain identifiers), binary stream so Windows runtimes cannot
// inject CR.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);

  void row(const std::vector<std::string>& fields);
  void close();
  bool good() const { return static_cast<bool>(out_); }

 private:
  std::ofstream out_;
  std::size_t columns_;
};

}  // namespace anyonlab

#endif
