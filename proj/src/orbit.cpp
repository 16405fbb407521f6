#include "lgm/orbit.hpp"

#include <cmath>

namespace lgm {

ProjLine::ProjLine(const CVec& v) {
  const double nv = v.norm();
  if (!(nv > 0.0) || !std::isfinite(nv)) throw ShapeError("projective line needs a nonzero vector");
  u_ = v / nv;
}

ProjHyperplane::ProjHyperplane(const Mat& spanning) {
  const auto dim = spanning.rows();
  if (spanning.cols() != dim - 1 || dim < 2) throw ShapeError("hyperplane needs dim-1 spanning columns");
  Eigen::JacobiSVD<Mat> svd(spanning, Eigen::ComputeFullU);
  const auto& s = svd.singularValues();
  if (!(s(s.size() - 1) > 1e-12 * s(0))) throw ShapeError("hyperplane spanning set is rank deficient");
  w_ = svd.matrixU().leftCols(dim - 1);
  eta_ = svd.matrixU().col(dim - 1);
}

ProjHyperplane ProjHyperplane::orthogonal_to(const CVec& normal) {
  const auto dim = normal.size();
  if (normal.norm() == 0.0) throw ShapeError("zero normal");
  // keep the given normal; the SVD only supplies the basis
  const CVec eta = normal / normal.norm();
  Eigen::JacobiSVD<Mat> svd(Mat(eta), Eigen::ComputeFullU);
  return ProjHyperplane(Mat(svd.matrixU().rightCols(dim - 1)), eta);
}

static Mat assemble(const CVec& u, const CVec& eta) {
  const auto dim = u.size();
  const Cx d = eta.dot(u);  // eta^H u
  return -Mat::Identity(dim, dim) + (static_cast<double>(dim) / d) * (u * eta.adjoint());
}

OrbitPoint::OrbitPoint(const ProjLine& v, const ProjHyperplane& w, double tol) {
  if (v.dim() != w.dim()) throw ShapeError("line and hyperplane live in different dimensions");
  if (v.dim() < 2) throw ShapeError("dimension must be at least 2");
  u_ = v.vector();
  w_ = w.basis();
  eta_ = w.normal();
  if (std::abs(eta_.dot(u_)) < tol) throw TransversalityError("line lies in the hyperplane within tolerance");
  x_ = assemble(u_, eta_);
}

double OrbitPoint::transversality() const { return std::abs(eta_.dot(u_)); }

double orbit_residual(const Mat& x) {
  const auto dim = x.rows();
  const double n = static_cast<double>(dim - 1);
  return (x * x - (n - 1.0) * x - n * Mat::Identity(dim, dim)).norm();
}

double OrbitPoint::residual() const { return orbit_residual(x_); }

OrbitPoint phi_pair(const ProjLine& v, const ProjHyperplane& w, double tol) { return OrbitPoint(v, w, tol); }

static Eigen::Index nearest(const CVec& ev, Cx target) {
  Eigen::Index k = 0;
  for (Eigen::Index i = 1; i < ev.size(); ++i)
    if (std::abs(ev(i) - target) < std::abs(ev(k) - target)) k = i;
  return k;
}

OrbitPoint retract_unchecked(const Mat& y, double* drift) {
  if (y.rows() != y.cols() || y.rows() < 2) throw ShapeError("retraction needs a square matrix");
  const auto dim = y.rows();
  const double n = static_cast<double>(dim - 1);
  Eigen::ComplexEigenSolver<Mat> right(y);
  Eigen::ComplexEigenSolver<Mat> left(y.adjoint());
  if (right.info() != Eigen::Success || left.info() != Eigen::Success)
    throw MembershipError("eigendecomposition failed");
  const Eigen::Index k = nearest(right.eigenvalues(), n);
  const Eigen::Index kl = nearest(left.eigenvalues(), n);
  double d = std::abs(right.eigenvalues()(k) - n);
  for (Eigen::Index i = 0; i < dim; ++i)
    if (i != k) d = std::max(d, std::abs(right.eigenvalues()(i) + 1.0));
  if (drift) *drift = d;
  CVec u = right.eigenvectors().col(k).normalized();
  CVec eta = left.eigenvectors().col(kl).normalized();
  if (!(std::abs(eta.dot(u)) > 1e-14)) throw MembershipError("degenerate eigen-split");
  Mat w = ProjHyperplane::orthogonal_to(eta).basis();
  return OrbitPoint(assemble(u, eta), u, w, eta);
}

OrbitPoint retract(const Mat& y, double max_drift) {
  double d = 0.0;
  OrbitPoint p = retract_unchecked(y, &d);
  if (!(d <= max_drift)) throw StepSizeError("retraction drift exceeds bound; reduce the step size");
  return p;
}

OrbitPoint OrbitPoint::from_matrix(const Mat& x, double tol) {
  double d = 0.0;
  OrbitPoint p = retract_unchecked(x, &d);
  if (!(d <= tol * std::max(1.0, static_cast<double>(x.rows() - 1))))
    throw MembershipError("spectrum is not {n, -1 (multiplicity n)}");
  return p;
}

EigenSplit split_eigen(const Mat& x, double tol) {
  OrbitPoint p = OrbitPoint::from_matrix(x, tol);
  return {ProjLine(p.eigenline()), ProjHyperplane(p.hyperplane())};
}

ProjHyperplane r_w0(const ProjLine& v) { return ProjHyperplane::orthogonal_to(v.vector()); }

Cx potential(const CartanVector& h, const Mat& x) {
  if (h.size() != x.rows() || x.rows() != x.cols()) throw ShapeError("potential: size mismatch");
  return killing_scale(h.rank()) * (h.diag().array() * x.diagonal().array()).sum();
}

OrbitPoint critical_point(int n, int j) {
  if (n < 1 || j < 0 || j > n) throw ShapeError("critical point index out of range");
  CVec e = CVec::Zero(n + 1);
  e(j) = 1.0;
  return phi_pair(ProjLine(e), ProjHyperplane::orthogonal_to(e));
}

std::vector<OrbitPoint> critical_points(int n) {
  std::vector<OrbitPoint> out;
  for (int j = 0; j <= n; ++j) out.push_back(critical_point(n, j));
  return out;
}

std::vector<OrbitPoint> critical_points(const CartanVector& h0) {
  const int n = h0.rank();
  int top = -1;
  for (int k = 0; k <= n; ++k) {
    if (std::abs(h0[k] - Cx(n)) <= 1e-12) {
      if (top >= 0) throw UnsupportedOrbitError("not the minimal orbit");
      top = k;
    } else if (std::abs(h0[k] + 1.0) > 1e-12) {
      throw UnsupportedOrbitError("only the minimal orbit diag(n,-1,...,-1) is supported");
    }
  }
  if (top < 0) throw UnsupportedOrbitError("only the minimal orbit diag(n,-1,...,-1) is supported");
  return critical_points(n);
}

OrbitPoint conjugate(const Mat& g, const OrbitPoint& x) {
  return OrbitPoint(ProjLine(g * x.eigenline()), ProjHyperplane(g * x.hyperplane()));
}

}  // namespace lgm
