#include "lgm/oracles.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "lgm/flow.hpp"
#include "lgm/realspace.hpp"
#include "lgm/tangent.hpp"

namespace lgm::oracle {

namespace {

std::vector<Mat> sl_complex_basis(int dim) {
  std::vector<Mat> out;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      if (i == j) continue;
      Mat e = Mat::Zero(dim, dim);
      e(i, j) = 1.0;
      out.push_back(e);
    }
  for (int k = 0; k + 1 < dim; ++k) {
    Mat e = Mat::Zero(dim, dim);
    e(k, k) = 1.0;
    e(k + 1, k + 1) = -1.0;
    out.push_back(e);
  }
  return out;
}

}  // namespace

Cx adjoint_trace_killing(const Mat& x, const Mat& y) {
  const int dim = static_cast<int>(x.rows());
  const auto basis = sl_complex_basis(dim);
  Mat b(static_cast<Eigen::Index>(dim) * dim, static_cast<Eigen::Index>(basis.size()));
  for (size_t k = 0; k < basis.size(); ++k) b.col(static_cast<Eigen::Index>(k)) = vec(basis[k]);
  const Eigen::ColPivHouseholderQR<Mat> qr(b);
  Cx tr = 0.0;
  for (size_t k = 0; k < basis.size(); ++k) {
    const Mat img = bracket(x, bracket(y, basis[k]));
    const CVec coord = qr.solve(vec(img));
    tr += coord(static_cast<Eigen::Index>(k));
  }
  return tr;
}

RMat sl_real_basis(int n) {
  std::vector<Mat> cols;
  for (const Mat& b : sl_complex_basis(n + 1)) {
    cols.push_back(b);
    cols.push_back(kI * b);
  }
  return real_span(cols);
}

double realified_killing(const Mat& x, const Mat& y) {
  const int dim = static_cast<int>(x.rows());
  std::vector<Mat> basis;
  for (const Mat& b : sl_complex_basis(dim)) {
    basis.push_back(b);
    basis.push_back(kI * b);
  }
  RMat b(2 * static_cast<Eigen::Index>(dim) * dim, static_cast<Eigen::Index>(basis.size()));
  for (size_t k = 0; k < basis.size(); ++k) b.col(static_cast<Eigen::Index>(k)) = realify(basis[k]);
  const Eigen::ColPivHouseholderQR<RMat> qr(b);
  double tr = 0.0;
  for (size_t k = 0; k < basis.size(); ++k) {
    const RVec coord = qr.solve(realify(bracket(x, bracket(y, basis[k]))));
    tr += coord(static_cast<Eigen::Index>(k));
  }
  return tr;
}

std::vector<Cx> fd_jacobian_eigenvalues(const Mat& x, const CartanVector& h, double step) {
  const int dim = static_cast<int>(x.rows());
  const RMat q = sl_real_basis(dim - 1);
  RMat jac(q.cols(), q.cols());
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Mat e = complexify(q.col(k), dim);
    const Mat zp = z_field(Mat(x + step * e), h), zm = z_field(Mat(x - step * e), h);
    jac.col(k) = q.transpose() * realify(Mat((zp - zm) / (2.0 * step)));
  }
  Eigen::EigenSolver<RMat> es(jac);
  std::vector<Cx> out;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) out.push_back(es.eigenvalues()(k));
  return out;
}

Mat svd_tangent_projection(const Mat& x, const Mat& v) {
  const int dim = static_cast<int>(x.rows());
  Eigen::JacobiSVD<Mat> svd(ad_matrix(x), Eigen::ComputeFullU);
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > 1e-9 * s(0)) ++r;
  const Mat u = svd.matrixU().leftCols(r);
  return unvec(u * (u.adjoint() * vec(v)), dim);
}

Cx fd_second_derivative(const Mat& a, const Mat& x, const CartanVector& h, double step) {
  auto f = [&](double t) {
    const Mat g = Mat(t * a).exp();
    return potential(h, Mat(g * x * g.inverse()));
  };
  return (f(step) - 2.0 * f(0.0) + f(-step)) / (step * step);
}

RayPoint level_point_on_ray(int j, const GraphSpec& g, const CartanVector& h, const CVec& delta, double level,
                            double t_max) {
  const int dim = g.dim();
  CVec ej = CVec::Zero(dim);
  ej(j) = 1.0;
  const double crit = potential(h, critical_point(dim - 1, j)).real();
  const bool down = level < crit;
  auto f1 = [&](double t) { return potential(h, graph_point(CVec(ej + t * delta), g, 0.0)).real(); };
  auto beyond = [&](double f) { return down ? f <= level : f >= level; };
  double lo = 0.0, hi = 0.0;
  bool bracketed = false;
  for (double t = 1e-3; t <= t_max; t *= 1.5) {
    if (beyond(f1(t))) {
      hi = t;
      bracketed = true;
      break;
    }
    lo = t;
  }
  RayPoint out{critical_point(dim - 1, j), 0.0, false};
  if (!bracketed) return out;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (beyond(f1(mid))) hi = mid; else lo = mid;
  }
  out.t = 0.5 * (lo + hi);
  out.point = graph_point(CVec(ej + out.t * delta), g, 0.0);
  out.found = true;
  return out;
}

}  // namespace lgm::oracle
