#include "lgm/realspace.hpp"

#include <cmath>

#include "lgm/lie.hpp"

namespace lgm {

RVec realify(const Mat& x) {
  const Eigen::Index m = x.size();
  const double s = std::sqrt(killing_scale(static_cast<int>(x.rows()) - 1));
  RVec v(2 * m);
  for (Eigen::Index k = 0; k < m; ++k) {
    v(k) = s * x(k).real();
    v(m + k) = s * x(k).imag();
  }
  return v;
}

Mat complexify(const RVec& v, int dim) {
  const Eigen::Index m = static_cast<Eigen::Index>(dim) * dim;
  if (v.size() != 2 * m) throw ShapeError("realified vector has wrong length");
  const double s = 1.0 / std::sqrt(killing_scale(dim - 1));
  Mat x(dim, dim);
  for (Eigen::Index k = 0; k < m; ++k) x(k) = s * Cx(v(k), v(m + k));
  return x;
}

RMat real_span(const RMat& cols, double rel_cutoff) {
  if (cols.cols() == 0) return RMat(cols.rows(), 0);
  Eigen::JacobiSVD<RMat> svd(cols, Eigen::ComputeThinU);
  const RVec& sv = svd.singularValues();
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > rel_cutoff * sv(0)) ++r;
  if (sv(0) == 0.0) r = 0;
  return svd.matrixU().leftCols(r);
}

RMat real_span(const std::vector<Mat>& vecs, double rel_cutoff) {
  if (vecs.empty()) return RMat(0, 0);
  RMat cols(2 * vecs[0].size(), static_cast<Eigen::Index>(vecs.size()));
  for (size_t k = 0; k < vecs.size(); ++k) cols.col(static_cast<Eigen::Index>(k)) = realify(vecs[k]);
  return real_span(cols, rel_cutoff);
}

RVec principal_sines(const RMat& qa, const RMat& qb) {
  if (qa.cols() == 0) return RVec(0);
  RMat resid = qb.cols() ? RMat(qa - qb * (qb.transpose() * qa)) : qa;
  Eigen::JacobiSVD<RMat> svd(resid);
  RVec s = svd.singularValues();
  return s.reverse();
}

RMat intersect(const RMat& qa, const RMat& qb, double cutoff) {
  if (qa.cols() == 0 || qb.cols() == 0) return RMat(qa.rows(), 0);
  RMat resid = qa - qb * (qb.transpose() * qa);
  Eigen::JacobiSVD<RMat> svd(resid, Eigen::ComputeFullV);
  const RVec& s = svd.singularValues();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < qa.cols(); ++k) {
    double sk = k < s.size() ? s(k) : 0.0;
    if (sk < cutoff) keep.push_back(k);
  }
  RMat out(qa.rows(), static_cast<Eigen::Index>(keep.size()));
  for (size_t k = 0; k < keep.size(); ++k)
    out.col(static_cast<Eigen::Index>(k)) = qa * svd.matrixV().col(keep[k]);
  return out;
}

std::vector<Mat> to_matrices(const RMat& cols, int dim) {
  std::vector<Mat> out;
  for (Eigen::Index k = 0; k < cols.cols(); ++k) out.push_back(complexify(cols.col(k), dim));
  return out;
}

}  // namespace lgm
