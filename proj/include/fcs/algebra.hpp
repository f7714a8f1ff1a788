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

#ifndef FCS_ALGEBRA_HPP
#define FCS_ALGEBRA_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fcs/linalg.hpp"
#include "fcs/tolerances.hpp"

namespace fcs {

/// Finite-dimensional C*-algebra given as an ordered direct sum of full
/// matrix blocks M_{d_1} + ... + M_{d_B}.
class FdAlgebra {
 public:
  struct Block {
    std::string label;
    int dim = 0;
  };

  FdAlgebra() = default;
  explicit FdAlgebra(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty())
      throw Error("empty_algebra", "an algebra needs at least one block");
    for (const auto& b : blocks_) {
      if (b.dim < 1)
        throw Error("bad_block_dim", "block dimension must be positive");
      for (const auto& o : blocks_)
        if (&o != &b && o.label == b.label)
          throw Error("duplicate_label", "block labels must be unique");
    }
    offsets_.resize(blocks_.size() + 1, 0);
    vec_offsets_.resize(blocks_.size() + 1, 0);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      offsets_[i + 1] = offsets_[i] + blocks_[i].dim;
      vec_offsets_[i + 1] = vec_offsets_[i] + blocks_[i].dim * blocks_[i].dim;
    }
  }

  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  int block_dim(int i) const { return blocks_[i].dim; }
  const std::string& block_label(int i) const { return blocks_[i].label; }
  /// Dimension of the representation space (sum of block dims).
  int rep_dim() const { return offsets_.back(); }
  /// Linear dimension of the algebra (sum of squared block dims).
  int linear_dim() const { return vec_offsets_.back(); }
  /// Row offset of block i in the representation space.
  int rep_offset(int i) const { return offsets_[i]; }
  /// Offset of block i's vectorized entries in coordinate vectors.
  int vec_offset(int i) const { return vec_offsets_[i]; }

  bool same_structure(const FdAlgebra& o) const {
    if (num_blocks() != o.num_blocks()) return false;
    for (int i = 0; i < num_blocks(); ++i)
      if (block_dim(i) != o.block_dim(i)) return false;
    return true;
  }

  std::vector<int> dims() const {
    std::vector<int> d;
    for (const auto& b : blocks_) d.push_back(b.dim);
    return d;
  }

 private:
  std::vector<Block> blocks_;
  std::vector<int> offsets_;
  std::vector<int> vec_offsets_;
};

inline FdAlgebra make_algebra(const std::vector<int>& dims) {
  if (dims.empty())
    throw Error("empty_algebra", "make_algebra: need at least one block");
  std::vector<FdAlgebra::Block> blocks;
  for (std::size_t i = 0; i < dims.size(); ++i)
    blocks.push_back({"b" + std::to_string(i), dims[i]});
  return FdAlgebra(std::move(blocks));
}

/// Element of an FdAlgebra, stored as one dense complex matrix per block.
class AlgElement {
 public:
  AlgElement() = default;
  AlgElement(FdAlgebra alg, std::vector<Matrix> blocks)
      : alg_(std::move(alg)), blocks_(std::move(blocks)) {
    if (static_cast<int>(blocks_.size()) != alg_.num_blocks())
      throw Error("shape_mismatch", "element has wrong number of blocks");
    for (int i = 0; i < alg_.num_blocks(); ++i)
      if (blocks_[i].rows() != alg_.block_dim(i) ||
          blocks_[i].cols() != alg_.block_dim(i))
        throw Error("shape_mismatch", "element block has wrong shape");
  }

  static AlgElement zero(const FdAlgebra& alg) {
    std::vector<Matrix> b;
    for (int i = 0; i < alg.num_blocks(); ++i)
      b.push_back(Matrix::Zero(alg.block_dim(i), alg.block_dim(i)));
    return AlgElement(alg, std::move(b));
  }

  static AlgElement identity(const FdAlgebra& alg) {
    std::vector<Matrix> b;
    for (int i = 0; i < alg.num_blocks(); ++i)
      b.push_back(Matrix::Identity(alg.block_dim(i), alg.block_dim(i)));
    return AlgElement(alg, std::move(b));
  }

  /// Element from its coordinate vector (blockwise column-major stacking).
  static AlgElement from_coords(const FdAlgebra& alg, const Vector& v) {
    if (v.size() != alg.linear_dim())
      throw Error("shape_mismatch", "coordinate vector has wrong length");
    std::vector<Matrix> b;
    for (int i = 0; i < alg.num_blocks(); ++i) {
      const int d = alg.block_dim(i);
      b.push_back(linalg::unvec(v.segment(alg.vec_offset(i), d * d), d, d));
    }
    return AlgElement(alg, std::move(b));
  }

  const FdAlgebra& algebra() const { return alg_; }
  const Matrix& block(int i) const { return blocks_[i]; }
  Matrix& block(int i) { return blocks_[i]; }

  Vector coords() const {
    Vector v(alg_.linear_dim());
    for (int i = 0; i < alg_.num_blocks(); ++i) {
      const int d = alg_.block_dim(i);
      v.segment(alg_.vec_offset(i), d * d) = linalg::vec(blocks_[i]);
    }
    return v;
  }

  /// The element acting on the representation space (block diagonal).
  Matrix full_matrix() const {
    Matrix m = Matrix::Zero(alg_.rep_dim(), alg_.rep_dim());
    for (int i = 0; i < alg_.num_blocks(); ++i)
      m.block(alg_.rep_offset(i), alg_.rep_offset(i), alg_.block_dim(i),
              alg_.block_dim(i)) = blocks_[i];
    return m;
  }

  static AlgElement from_full_matrix(const FdAlgebra& alg, const Matrix& m) {
    std::vector<Matrix> b;
    for (int i = 0; i < alg.num_blocks(); ++i)
      b.push_back(m.block(alg.rep_offset(i), alg.rep_offset(i),
                          alg.block_dim(i), alg.block_dim(i)));
    return AlgElement(alg, std::move(b));
  }

  AlgElement adjoint() const {
    std::vector<Matrix> b;
    for (const auto& m : blocks_) b.push_back(m.adjoint());
    return AlgElement(alg_, std::move(b));
  }

  AlgElement operator+(const AlgElement& o) const {
    std::vector<Matrix> b;
    for (int i = 0; i < alg_.num_blocks(); ++i) b.push_back(blocks_[i] + o.blocks_[i]);
    return AlgElement(alg_, std::move(b));
  }

  AlgElement operator-(const AlgElement& o) const {
    std::vector<Matrix> b;
    for (int i = 0; i < alg_.num_blocks(); ++i) b.push_back(blocks_[i] - o.blocks_[i]);
    return AlgElement(alg_, std::move(b));
  }

  AlgElement operator*(const AlgElement& o) const {
    std::vector<Matrix> b;
    for (int i = 0; i < alg_.num_blocks(); ++i) b.push_back(blocks_[i] * o.blocks_[i]);
    return AlgElement(alg_, std::move(b));
  }

  friend AlgElement operator*(Complex c, const AlgElement& e) {
    std::vector<Matrix> b;
    for (const auto& m : e.blocks_) b.push_back(c * m);
    return AlgElement(e.alg_, std::move(b));
  }

  /// C*-norm: the largest blockwise operator norm.
  double norm() const {
    double n = 0.0;
    for (const auto& m : blocks_) n = std::max(n, linalg::operator_norm(m));
    return n;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& m : blocks_) s += m.squaredNorm();
    return std::sqrt(s);
  }

  Complex trace() const {
    Complex t = 0.0;
    for (const auto& m : blocks_) t += m.trace();
    return t;
  }

  bool is_self_adjoint(double eps) const {
    return (*this - adjoint()).frobenius_norm() <= eps;
  }

  bool is_projection(double eps) const {
    return is_self_adjoint(eps) && (*this * *this - *this).frobenius_norm() <= eps;
  }
};

/// State on an FdAlgebra: one density block per algebra block,
/// rho(C) = sum_i tr(D_i C_i).
class StateOnAlgebra {
 public:
  StateOnAlgebra() = default;
  StateOnAlgebra(FdAlgebra alg, std::vector<Matrix> densities,
                 const Tolerances& tol = default_tolerances())
      : alg_(std::move(alg)), densities_(std::move(densities)) {
    if (static_cast<int>(densities_.size()) != alg_.num_blocks())
      throw Error("shape_mismatch", "state has wrong number of blocks");
    double tr = 0.0;
    for (int i = 0; i < alg_.num_blocks(); ++i) {
      const auto& d = densities_[i];
      if (d.rows() != alg_.block_dim(i) || d.cols() != alg_.block_dim(i))
        throw Error("shape_mismatch", "density block has wrong shape");
      if (!linalg::is_hermitian(d, tol.eps_psd * 10 * std::max(1.0, d.norm())))
        throw Error("rho_not_hermitian", "density block is not Hermitian");
      if (linalg::min_eigenvalue(d) < -tol.eps_psd * d.rows())
        throw Error("rho_not_psd", "density block is not positive semidefinite");
      tr += d.trace().real();
    }
    if (std::abs(tr - 1.0) > tol.eps_psd * alg_.rep_dim())
      throw Error("rho_not_normalized", "densities do not sum to unit trace");
  }

  const FdAlgebra& algebra() const { return alg_; }
  const Matrix& density(int i) const { return densities_[i]; }

  Complex operator()(const AlgElement& c) const {
    Complex v = 0.0;
    for (int i = 0; i < alg_.num_blocks(); ++i)
      v += (densities_[i] * c.block(i)).trace();
    return v;
  }

  /// Coordinate vector pairing: rho(C) = <coords(), C.coords()> with the
  /// standard Hermitian inner product.
  Vector coords() const {
    Vector v(alg_.linear_dim());
    for (int i = 0; i < alg_.num_blocks(); ++i) {
      const int d = alg_.block_dim(i);
      // tr(D C) = sum_{kl} D(k,l) C(l,k) = <vec(D^dagger), vec(C)>
      v.segment(alg_.vec_offset(i), d * d) = linalg::vec(densities_[i].adjoint());
    }
    return v;
  }

 private:
  FdAlgebra alg_;
  std::vector<Matrix> densities_;
};

/// Von Neumann entropy -sum_i tr(D_i log D_i) in nats, with 0 log 0 = 0.
inline double entropy(const StateOnAlgebra& rho) {
  double s = 0.0;
  for (int i = 0; i < rho.algebra().num_blocks(); ++i) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.density(i));
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      const double p = es.eigenvalues()(k);
      if (p > 0.0) s -= p * std::log(p);
    }
  }
  return s;
}

/// Entropy of a bare density matrix (helper for window densities).
inline double entropy_of_density(const Matrix& d) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((d + d.adjoint()) / 2.0);
  double s = 0.0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double p = es.eigenvalues()(k);
    if (p > 0.0) s -= p * std::log(p);
  }
  return s;
}

/// Minimal projections of the unital *-algebra generated by a commuting
/// self-adjoint family. Joint eigenspaces are found from a random real
/// combination and refined by clustering the per-element expectation
/// signatures; the projections sum to the identity.
inline std::vector<AlgElement> minimal_projections(
    const std::vector<AlgElement>& family,
    const Tolerances& tol = default_tolerances()) {
  if (family.empty())
    throw Error("empty_family", "minimal_projections: empty family");
  const FdAlgebra& alg = family.front().algebra();
  const double scale = [&] {
    double s = 1.0;
    for (const auto& a : family) s = std::max(s, a.norm());
    return s;
  }();
  for (const auto& a : family) {
    if (!a.is_self_adjoint(tol.eps_alg * 100 * scale))
      throw Error("not_self_adjoint", "family member is not self-adjoint");
    for (const auto& b : family)
      if ((a * b - b * a).frobenius_norm() > tol.eps_alg * 100 * scale * scale)
        throw Error("non_commuting_family", "family does not commute");
  }

  // Fixed seed keeps the output deterministic across runs.
  std::mt19937_64 rng(0x5bd1e995u);
  std::normal_distribution<double> nd(0.0, 1.0);
  AlgElement h = AlgElement::zero(alg);
  for (const auto& a : family) h = h + Complex(nd(rng), 0.0) * a;
  h = Complex(0.5, 0.0) * (h + h.adjoint());

  struct EigVec {
    int block;
    Vector v;
    std::vector<double> signature;
  };
  std::vector<EigVec> vecs;
  for (int i = 0; i < alg.num_blocks(); ++i) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(h.block(i));
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      EigVec ev;
      ev.block = i;
      ev.v = es.eigenvectors().col(k);
      for (const auto& a : family)
        ev.signature.push_back((ev.v.adjoint() * a.block(i) * ev.v)(0).real());
      vecs.push_back(std::move(ev));
    }
  }

  // Cluster by signature with the documented gap threshold.
  const double gap = 1e-8 * std::max(1.0, scale);
  std::vector<int> cluster(vecs.size(), -1);
  int nclusters = 0;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    if (cluster[i] >= 0) continue;
    cluster[i] = nclusters++;
    for (std::size_t j = i + 1; j < vecs.size(); ++j) {
      if (cluster[j] >= 0) continue;
      double d = 0.0;
      for (std::size_t f = 0; f < family.size(); ++f)
        d = std::max(d, std::abs(vecs[i].signature[f] - vecs[j].signature[f]));
      if (d <= gap) cluster[j] = cluster[i];
    }
  }

  std::vector<AlgElement> projections(nclusters, AlgElement::zero(alg));
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    auto& p = projections[cluster[i]].block(vecs[i].block);
    p += vecs[i].v * vecs[i].v.adjoint();
  }

  for (const auto& p : projections)
    if (!p.is_projection(tol.eps_alg * 100 * alg.rep_dim()))
      throw Error("projection_check_failed",
                  "clustered joint eigenspace is not a clean projection");
  return projections;
}

}  // namespace fcs

#endif  // FCS_ALGEBRA_HPP
