// Copyright 2026 fcstool authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FCS_LINALG_HPP
#define FCS_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "fcs/tolerances.hpp"

namespace fcs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace linalg {

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

inline Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

/// Largest singular value.
inline double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.jacobiSvd().singularValues()(0);
}

inline bool is_hermitian(const Matrix& m, double eps) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= eps;
}

/// Smallest eigenvalue of the Hermitian part.
inline double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
  return es.eigenvalues().minCoeff();
}

/// Partial trace over selected tensor factors. `dims` are the factor
/// dimensions (row-major, first factor slowest); `traced[k]` marks factor k
/// for tracing.
inline Matrix partial_trace(const Matrix& m, const std::vector<int>& dims,
                            const std::vector<bool>& traced) {
  const int nf = static_cast<int>(dims.size());
  long total = 1, kept = 1;
  for (int k = 0; k < nf; ++k) {
    total *= dims[k];
    if (!traced[k]) kept *= dims[k];
  }
  if (m.rows() != total || m.cols() != total)
    throw Error("shape_mismatch", "partial_trace: dims do not match matrix");
  Matrix out = Matrix::Zero(kept, kept);
  std::vector<int> idx(nf, 0), jdx(nf, 0);
  for (long r = 0; r < total; ++r) {
    long rr = r;
    for (int k = nf - 1; k >= 0; --k) { idx[k] = rr % dims[k]; rr /= dims[k]; }
    long rk = 0;
    for (int k = 0; k < nf; ++k) if (!traced[k]) rk = rk * dims[k] + idx[k];
    for (long c = 0; c < total; ++c) {
      long cc = c;
      bool diag_on_traced = true;
      for (int k = nf - 1; k >= 0; --k) { jdx[k] = cc % dims[k]; cc /= dims[k]; }
      for (int k = 0; k < nf; ++k)
        if (traced[k] && idx[k] != jdx[k]) { diag_on_traced = false; break; }
      if (!diag_on_traced) continue;
      long ck = 0;
      for (int k = 0; k < nf; ++k) if (!traced[k]) ck = ck * dims[k] + jdx[k];
      out(rk, ck) += m(r, c);
    }
  }
  return out;
}

/// Incrementally maintained orthonormal span with a residual threshold.
class SpanBuilder {
 public:
  explicit SpanBuilder(Eigen::Index dim, double tol = 1e-10)
      : dim_(dim), tol_(tol) {}

  /// Returns true if v added a new direction. The residual test is relative
  /// to the incoming vector's norm.
  bool add(const Vector& v) {
    Vector r = v;
    const double n0 = r.norm();
    if (n0 <= tol_) return false;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis_) r -= b.dot(r) * b;
    if (r.norm() <= tol_ * std::max(1.0, n0)) return false;
    basis_.push_back(r / r.norm());
    return true;
  }

  bool contains(const Vector& v, double eps) const {
    Vector r = v;
    for (const auto& b : basis_) r -= b.dot(r) * b;
    return r.norm() <= eps * std::max(1.0, v.norm());
  }

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vector>& basis() const { return basis_; }

  Matrix basis_matrix() const {
    Matrix out(dim_, basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) out.col(k) = basis_[k];
    return out;
  }

 private:
  Eigen::Index dim_;
  double tol_;
  std::vector<Vector> basis_;
};

/// Dimension of the intersection of two subspaces given by orthonormal
/// column bases, counted via principal angles (singular values near 1).
inline int intersection_dimension(const Matrix& onb_a, const Matrix& onb_b,
                                  double eps = 1e-8) {
  if (onb_a.cols() == 0 || onb_b.cols() == 0) return 0;
  Matrix g = onb_a.adjoint() * onb_b;
  auto sv = g.jacobiSvd().singularValues();
  int count = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) >= 1.0 - eps) ++count;
  return count;
}

inline Matrix random_ginibre(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(n(rng), n(rng));
  return m;
}

inline Matrix random_psd(int n, std::mt19937_64& rng) {
  Matrix g = random_ginibre(n, n, rng);
  return g * g.adjoint();
}

inline Matrix random_density(int n, std::mt19937_64& rng) {
  Matrix p = random_psd(n, rng);
  return p / p.trace().real();
}

/// Inverse square root of a Hermitian positive definite matrix.
inline Matrix inv_sqrt_psd(const Matrix& m, double floor_eps = 1e-14) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
  RealVector ev = es.eigenvalues();
  Matrix d = Matrix::Zero(ev.size(), ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) <= floor_eps)
      throw Error("singular_matrix", "inv_sqrt_psd: matrix not positive definite");
    d(i, i) = 1.0 / std::sqrt(ev(i));
  }
  return es.eigenvectors() * d * es.eigenvectors().adjoint();
}

inline long long gcdll(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) { long long t = a % b; a = b; b = t; }
  return a;
}

inline long long lcmll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return a / gcdll(a, b) * b;
}

}  // namespace linalg
}  // namespace fcs

#endif  // FCS_LINALG_HPP
