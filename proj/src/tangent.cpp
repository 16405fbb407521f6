#include "lgm/tangent.hpp"

#include <cmath>

namespace lgm {

CVec vec(const Mat& x) { return Eigen::Map<const CVec>(x.data(), x.size()); }

Mat unvec(const CVec& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim) throw ShapeError("unvec: wrong length");
  return Eigen::Map<const Mat>(v.data(), dim, dim);
}

Mat ad_matrix(const Mat& x) {
  const auto d = x.rows();
  Mat out = Mat::Zero(d * d, d * d);
  // vec(XY - YX) = (I ⊗ X - X^T ⊗ I) vec(Y)
  for (Eigen::Index b = 0; b < d; ++b)
    out.block(b * d, b * d, d, d) += x;
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b)
      out.block(a * d, b * d, d, d) -= x(b, a) * Mat::Identity(d, d);
  return out;
}

TangentSpace::TangentSpace(const OrbitPoint& x) : dim_(x.dim()) {
  const int n = x.rank();
  const Mat uperp = ProjHyperplane::orthogonal_to(x.eigenline()).basis();
  Mat cols(static_cast<Eigen::Index>(dim_) * dim_, 2 * n);
  for (int k = 0; k < n; ++k) {
    cols.col(k) = vec(x.eigenline() * uperp.col(k).adjoint());
    cols.col(n + k) = vec(x.hyperplane().col(k) * x.normal().adjoint());
  }
  Eigen::HouseholderQR<Mat> qr(cols);
  q_ = qr.householderQ() * Mat::Identity(cols.rows(), cols.cols());
}

Mat TangentSpace::project(const Mat& v) const {
  const CVec c = vec(v);
  return unvec(q_ * (q_.adjoint() * c), dim_);
}

double TangentSpace::normal_component(const Mat& v) const { return b_norm(v - project(v)); }

std::vector<Mat> TangentSpace::real_basis() const {
  const double s = 1.0 / std::sqrt(killing_scale(dim_ - 1));
  std::vector<Mat> out;
  for (Eigen::Index k = 0; k < q_.cols(); ++k) {
    Mat e = s * unvec(q_.col(k), dim_);
    out.push_back(e);
    out.push_back(kI * e);
  }
  return out;
}

std::vector<Mat> TangentSpace::complex_basis() const {
  std::vector<Mat> out;
  for (Eigen::Index k = 0; k < q_.cols(); ++k) out.push_back(unvec(q_.col(k), dim_));
  return out;
}

RMat TangentSpace::real_basis_matrix() const {
  const auto b = real_basis();
  RMat out(2 * static_cast<Eigen::Index>(dim_) * dim_, static_cast<Eigen::Index>(b.size()));
  const double s = std::sqrt(killing_scale(dim_ - 1));
  const Eigen::Index m = static_cast<Eigen::Index>(dim_) * dim_;
  for (size_t k = 0; k < b.size(); ++k)
    for (Eigen::Index i = 0; i < m; ++i) {
      out(i, static_cast<Eigen::Index>(k)) = s * b[k](i).real();
      out(m + i, static_cast<Eigen::Index>(k)) = s * b[k](i).imag();
    }
  return out;
}

AdInverse::AdInverse(const Mat& x, double cutoff) : dim_(static_cast<int>(x.rows())) {
  Eigen::JacobiSVD<Mat> svd(ad_matrix(x), Eigen::ComputeFullU | Eigen::ComputeFullV);
  s_ = svd.singularValues();
  rank_ = 0;
  while (rank_ < s_.size() && s_(rank_) > cutoff * s_(0)) ++rank_;
  u_ = svd.matrixU().leftCols(rank_);
  v_ = svd.matrixV().leftCols(rank_);
}

Mat AdInverse::apply(const Mat& v) const {
  CVec c = u_.adjoint() * vec(v);
  for (int k = 0; k < rank_; ++k) c(k) /= s_(k);
  return unvec(v_ * c, dim_);
}

double AdInverse::off_image(const Mat& v) const {
  const CVec c = vec(v);
  const double nv = c.norm();
  if (nv == 0.0) return 0.0;
  return (c - u_ * (u_.adjoint() * c)).norm() / nv;
}

}  // namespace lgm
