#pragma once

#include <vector>

#include "lgm/lie.hpp"

namespace lgm {

class ProjLine {
 public:
  explicit ProjLine(const CVec& v);
  const CVec& vector() const { return u_; }
  int dim() const { return static_cast<int>(u_.size()); }

 private:
  CVec u_;
};

class ProjHyperplane {
 public:
  // columns span the hyperplane; re-orthonormalized
  explicit ProjHyperplane(const Mat& spanning);
  static ProjHyperplane orthogonal_to(const CVec& normal);

  const Mat& basis() const { return w_; }
  const CVec& normal() const { return eta_; }
  int dim() const { return static_cast<int>(w_.rows()); }

 private:
  ProjHyperplane(Mat w, CVec eta) : w_(std::move(w)), eta_(std::move(eta)) {}
  Mat w_;
  CVec eta_;
};

// Point of the minimal orbit: eigenvalue n on the line u, -1 on W.
class OrbitPoint {
 public:
  OrbitPoint(const ProjLine& v, const ProjHyperplane& w, double tol = tol::kTransversality);
  // validates the spectrum and caches the split
  static OrbitPoint from_matrix(const Mat& x, double tol = tol::kMembership);

  const Mat& matrix() const { return x_; }
  int rank() const { return static_cast<int>(x_.rows()) - 1; }
  int dim() const { return static_cast<int>(x_.rows()); }
  const CVec& eigenline() const { return u_; }
  const Mat& hyperplane() const { return w_; }
  const CVec& normal() const { return eta_; }
  // |(u, eta)|, 1 for orthogonal pairs, 0 when u lies in W
  double transversality() const;
  // ||x^2 - (n-1)x - nI||
  double residual() const;

 private:
  OrbitPoint(Mat x, CVec u, Mat w, CVec eta) : x_(std::move(x)), u_(std::move(u)), w_(std::move(w)), eta_(std::move(eta)) {}
  friend OrbitPoint retract_unchecked(const Mat&, double*);
  Mat x_;
  CVec u_;
  Mat w_;
  CVec eta_;
};

double orbit_residual(const Mat& x);

OrbitPoint phi_pair(const ProjLine& v, const ProjHyperplane& w, double tol = tol::kTransversality);

struct EigenSplit {
  ProjLine line;
  ProjHyperplane hyperplane;
};
EigenSplit split_eigen(const Mat& x, double tol = tol::kMembership);

// Spectral retraction: keep the eigenspaces of the eigenvalue nearest n and
// of the rest, snap the spectrum to {n, -1}.  drift = max eigenvalue move.
OrbitPoint retract_unchecked(const Mat& y, double* drift);
OrbitPoint retract(const Mat& y, double max_drift = 0.5);

ProjHyperplane r_w0(const ProjLine& v);

Cx potential(const CartanVector& h, const Mat& x);
inline Cx potential(const CartanVector& h, const OrbitPoint& x) { return potential(h, x.matrix()); }

// diag matrices with n in slot j, j = 0..n
std::vector<OrbitPoint> critical_points(int n);
std::vector<OrbitPoint> critical_points(const CartanVector& h0);
OrbitPoint critical_point(int n, int j);

// g H0 g^-1 for invertible g
OrbitPoint conjugate(const Mat& g, const OrbitPoint& x);

}  // namespace lgm
