#pragma once

#include <vector>

#include "lgm/orbit.hpp"

namespace lgm {

// Matrix of ad(x) acting on column-major vec(Y).
Mat ad_matrix(const Mat& x);
CVec vec(const Mat& x);
Mat unvec(const CVec& v, int dim);

// Complex tangent space im ad(x) at an orbit point, built from the
// eigen-split: T = { u a^H + b eta^H : a ⟂ u, b ∈ W }.
class TangentSpace {
 public:
  explicit TangentSpace(const OrbitPoint& x);

  int dim() const { return dim_; }
  int complex_dim() const { return static_cast<int>(q_.cols()); }
  int real_dim() const { return 2 * complex_dim(); }

  // b_tau-orthogonal projection onto T
  Mat project(const Mat& v) const;
  // b_tau norm of the normal component
  double normal_component(const Mat& v) const;
  // b_tau-orthonormal real basis {e_k, i e_k}
  std::vector<Mat> real_basis() const;
  RMat real_basis_matrix() const;
  // Frobenius-orthonormal complex basis
  std::vector<Mat> complex_basis() const;

 private:
  int dim_;
  Mat q_;  // Frobenius-orthonormal complex basis, columns vec'd
};

// Pseudo-inverse of ad(x) on the orthogonal complement of its kernel.
class AdInverse {
 public:
  explicit AdInverse(const Mat& x, double cutoff = tol::kKernelCutoff);
  Mat apply(const Mat& v) const;
  int rank() const { return rank_; }
  // relative size of the component of v outside im ad(x)
  double off_image(const Mat& v) const;

 private:
  int dim_;
  int rank_;
  Mat u_, v_;
  RVec s_;
};

}  // namespace lgm
