#ifndef ANYONLAB_SPARSE_SYMMETRIC_HPP
#define ANYONLAB_SPARSE_SYMMETRIC_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace anyonlab {

// Assembly provenance carried with every matrix (and echoed through the
// on-disk cache).
struct AssemblyMeta {
  double alpha = 0.0;
  double epsilon = 0.0;
  double omega_b = 0.0;
  int n_max = 0;
  int m_max = 0;
  int quad_order = 0;
};

struct Triplet {
  int row = 0, col = 0;  // row <= col
  double value = 0.0;
};

// Symmetric sparse matrix stored as upper-triangular coordinates plus a
// compressed adjacency built on demand for mat-vec.
class SparseSymmetric {
 public:
  SparseSymmetric() = default;
  SparseSymmetric(int dimension, std::vector<Triplet> upper, AssemblyMeta meta);

  int dimension() const { return dim_; }
  const std::vector<Triplet>& entries() const { return upper_; }
  const AssemblyMeta& meta() const { return meta_; }

  void multiply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const;
  Eigen::VectorXd operator*(const Eigen::VectorXd& x) const;

  Eigen::MatrixXd dense() const;

 private:
  int dim_ = 0;
  std::vector<Triplet> upper_;   // sorted (row, col), no explicit zeros
  AssemblyMeta meta_;
};

// Binary cache with a version header; cache hits are bit-identical to
// recomputation in single-threaded mode.
bool save_matrix_cache(const std::string& path, const SparseSymmetric& m);
bool load_matrix_cache(const std::string& path, const AssemblyMeta& expected,
                       SparseSymmetric& out);
std::string matrix_cache_filename(const AssemblyMeta& meta);

}  // namespace anyonlab

#endif
