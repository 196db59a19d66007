#include "anyonlab/lanczos.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace anyonlab {

namespace {

// Deterministic start vector: fixed-seed xorshift64*, normalized.
Eigen::VectorXd start_vector(int n) {
  std::uint64_t s = 0x9E3779B97F4A7C15ull;
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    const std::uint64_t r = s * 0x2545F4914F6CDD1Dull;
    v[i] = static_cast<double>(r >> 11) / 9007199254740992.0 - 0.5;
  }
  v.normalize();
  return v;
}

Eigen::SparseMatrix<double> to_eigen_sparse(const SparseSymmetric& m, double shift) {
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(2 * m.entries().size() + m.dimension());
  for (const auto& t : m.entries()) {
    trips.emplace_back(t.row, t.col, t.value);
    if (t.row != t.col) trips.emplace_back(t.col, t.row, t.value);
  }
  for (int i = 0; i < m.dimension(); ++i) trips.emplace_back(i, i, -shift);
  Eigen::SparseMatrix<double> s(m.dimension(), m.dimension());
  s.setFromTriplets(trips.begin(), trips.end());
  return s;
}

}  // namespace

SpectralResult lanczos_smallest(const SparseSymmetric& m, int k,
                                const LanczosOptions& opt) {
  const int n = m.dimension();
  if (k < 1 || k >= n) throw std::invalid_argument("lanczos_smallest: need k < dim");

  std::unique_ptr<Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>> solver;
  Eigen::SparseMatrix<double> shifted;
  if (opt.shift_invert) {
    shifted = to_eigen_sparse(m, opt.shift);
    solver = std::make_unique<Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>>();
    solver->compute(shifted);
    if (solver->info() != Eigen::Success)
      throw std::runtime_error("lanczos_smallest: shift-invert factorization failed");
  }
  auto apply = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    if (opt.shift_invert)
      y = solver->solve(x);
    else
      m.multiply(x, y);
  };

  const int max_iter =
      opt.max_iter > 0 ? std::min(opt.max_iter, n) : std::min(n, 4 * k + 200);

  std::vector<Eigen::VectorXd> basis;
  basis.reserve(max_iter);
  std::vector<double> alphas, betas;
  Eigen::VectorXd v = start_vector(n), w(n);
  basis.push_back(v);

  int it = 0;
  for (; it < max_iter; ++it) {
    apply(basis[it], w);
    const double a = basis[it].dot(w);
    alphas.push_back(a);
    w -= a * basis[it];
    if (it > 0) w -= betas[it - 1] * basis[it - 1];
    // full reorthogonalization, two passes
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) w -= q.dot(w) * q;
    const double b = w.norm();
    // Periodic convergence test on the k wanted Ritz pairs: the residual of
    // pair (theta, y) is beta_m |last component of y|, available without
    // forming the long vectors.
    const int mdim = it + 1;
    if (mdim > k && mdim % 5 == 0) {
      Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alphas.data(), mdim);
      Eigen::VectorXd sub(std::max(mdim - 1, 0));
      for (int i = 0; i + 1 < mdim; ++i) sub[i] = betas[i];
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
      es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      bool done = true;
      for (int i = 0; i < k && done; ++i) {
        // Smallest originals live at the top of the inverted spectrum.
        const int col = opt.shift_invert ? mdim - 1 - i : i;
        const double theta = es.eigenvalues()[col];
        const double est = b * std::abs(es.eigenvectors()(mdim - 1, col));
        if (est > 0.1 * opt.tol * (1.0 + std::abs(theta))) done = false;
      }
      if (done) break;
    }
    if (b < 1e-14) break;  // invariant subspace found
    betas.push_back(b);
    basis.push_back(w / b);
  }

  const int mdim = static_cast<int>(alphas.size());
  Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alphas.data(), mdim);
  Eigen::VectorXd sub(std::max(mdim - 1, 0));
  for (int i = 0; i + 1 < mdim; ++i) sub[i] = betas[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("lanczos_smallest: tridiagonal solve failed");

  SpectralResult res;
  res.truncation = m.meta();
  res.iterations = mdim;
  const int found = std::min(k, mdim);
  for (int i = 0; i < found; ++i) {
    // In shift-invert mode the largest inverted values map to the smallest
    // originals.
    const int col = opt.shift_invert ? mdim - 1 - i : i;
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (int j = 0; j < mdim; ++j) x += es.eigenvectors()(j, col) * basis[j];
    x.normalize();
    Eigen::VectorXd mx;
    m.multiply(x, mx);
    const double lambda = x.dot(mx);
    const double resid = (mx - lambda * x).norm();
    res.eigenvalues.push_back(lambda);
    res.residuals.push_back(resid);
    res.converged.push_back(resid <= opt.tol * (1.0 + std::abs(lambda)));
    if (opt.want_vectors) res.eigenvectors.push_back(std::move(x));
  }
  // Ritz values from the tridiagonal are sorted; after Rayleigh-quotient
  // refinement enforce ordering explicitly.
  {
    std::vector<int> perm(found);
    for (int i = 0; i < found; ++i) perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
      return res.eigenvalues[a] < res.eigenvalues[b];
    });
    SpectralResult sorted;
    sorted.truncation = res.truncation;
    sorted.iterations = res.iterations;
    for (int i = 0; i < found; ++i) {
      sorted.eigenvalues.push_back(res.eigenvalues[perm[i]]);
      sorted.residuals.push_back(res.residuals[perm[i]]);
      sorted.converged.push_back(res.converged[perm[i]]);
      if (opt.want_vectors)
        sorted.eigenvectors.push_back(std::move(res.eigenvectors[perm[i]]));
    }
    res = std::move(sorted);
  }
  for (int i = found; i < k; ++i) {
    res.eigenvalues.push_back(std::numeric_limits<double>::quiet_NaN());
    res.residuals.push_back(std::numeric_limits<double>::infinity());
    res.converged.push_back(false);
  }
  return res;
}

}  // namespace anyonlab
