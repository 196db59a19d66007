#include "anyonlab/sparse_symmetric.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace anyonlab {

SparseSymmetric::SparseSymmetric(int dimension, std::vector<Triplet> upper,
                                 AssemblyMeta meta)
    : dim_(dimension), upper_(std::move(upper)), meta_(meta) {
  for (auto& t : upper_) {
    if (t.row > t.col) std::swap(t.row, t.col);
    if (t.row < 0 || t.col >= dim_)
      throw std::invalid_argument("SparseSymmetric: entry out of range");
  }
  std::sort(upper_.begin(), upper_.end(), [](const Triplet& a, const Triplet& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  // coalesce duplicates, drop explicit zeros
  std::vector<Triplet> merged;
  merged.reserve(upper_.size());
  for (const auto& t : upper_) {
    if (!merged.empty() && merged.back().row == t.row && merged.back().col == t.col)
      merged.back().value += t.value;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const Triplet& t) { return t.value == 0.0; });
  upper_ = std::move(merged);
}

void SparseSymmetric::multiply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
  if (x.size() != dim_) throw std::invalid_argument("SparseSymmetric: size mismatch");
  y.setZero(dim_);
  for (const auto& t : upper_) {
    y[t.row] += t.value * x[t.col];
    if (t.row != t.col) y[t.col] += t.value * x[t.row];
  }
}

Eigen::VectorXd SparseSymmetric::operator*(const Eigen::VectorXd& x) const {
  Eigen::VectorXd y;
  multiply(x, y);
  return y;
}

Eigen::MatrixXd SparseSymmetric::dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
  for (const auto& t : upper_) {
    m(t.row, t.col) = t.value;
    m(t.col, t.row) = t.value;
  }
  return m;
}

namespace {
constexpr char kMagic[8] = {'A', 'N', 'Y', 'M', 'A', 'T', '0', '1'};

bool meta_equal(const AssemblyMeta& a, const AssemblyMeta& b) {
  return a.alpha == b.alpha && a.epsilon == b.epsilon && a.omega_b == b.omega_b &&
         a.n_max == b.n_max && a.m_max == b.m_max && a.quad_order == b.quad_order;
}
}  // namespace

bool save_matrix_cache(const std::string& path, const SparseSymmetric& m) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) return false;
  f.write(kMagic, sizeof(kMagic));
  const AssemblyMeta& meta = m.meta();
  const int dim = m.dimension();
  const std::uint64_t nnz = m.entries().size();
  f.write(reinterpret_cast<const char*>(&meta.alpha), sizeof(double));
  f.write(reinterpret_cast<const char*>(&meta.epsilon), sizeof(double));
  f.write(reinterpret_cast<const char*>(&meta.omega_b), sizeof(double));
  f.write(reinterpret_cast<const char*>(&meta.n_max), sizeof(int));
  f.write(reinterpret_cast<const char*>(&meta.m_max), sizeof(int));
  f.write(reinterpret_cast<const char*>(&meta.quad_order), sizeof(int));
  f.write(reinterpret_cast<const char*>(&dim), sizeof(dim));
  f.write(reinterpret_cast<const char*>(&nnz), sizeof(nnz));
  for (const auto& t : m.entries())
    f.write(reinterpret_cast<const char*>(&t), sizeof(t));
  return static_cast<bool>(f);
}

bool load_matrix_cache(const std::string& path, const AssemblyMeta& expected,
                       SparseSymmetric& out) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return false;
  char magic[8];
  f.read(magic, sizeof(magic));
  if (!f || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) return false;
  AssemblyMeta meta;
  int dim = 0;
  std::uint64_t nnz = 0;
  f.read(reinterpret_cast<char*>(&meta.alpha), sizeof(double));
  f.read(reinterpret_cast<char*>(&meta.epsilon), sizeof(double));
  f.read(reinterpret_cast<char*>(&meta.omega_b), sizeof(double));
  f.read(reinterpret_cast<char*>(&meta.n_max), sizeof(int));
  f.read(reinterpret_cast<char*>(&meta.m_max), sizeof(int));
  f.read(reinterpret_cast<char*>(&meta.quad_order), sizeof(int));
  f.read(reinterpret_cast<char*>(&dim), sizeof(dim));
  f.read(reinterpret_cast<char*>(&nnz), sizeof(nnz));
  if (!f || !meta_equal(meta, expected)) return false;
  std::vector<Triplet> entries(nnz);
  for (auto& t : entries) f.read(reinterpret_cast<char*>(&t), sizeof(t));
  if (!f) return false;
  out = SparseSymmetric(dim, std::move(entries), meta);
  return true;
}

std::string matrix_cache_filename(const AssemblyMeta& m) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "rel_a%.10g_e%.10g_w%.10g_n%d_m%d_q%d.anymat",
                m.alpha, m.epsilon, m.omega_b, m.n_max, m.m_max, m.quad_order);
  return buf;
}

}  // namespace anyonlab
