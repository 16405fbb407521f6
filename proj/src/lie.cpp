#include "lgm/lie.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lgm {

double killing_scale(int n) { return 2.0 * (n + 1); }
double weyl_scale(int n) { return 1.0 / std::sqrt(killing_scale(n)); }

RootSystem::RootSystem(int rank) : rank_(rank) {
  if (rank < 1) throw ShapeError("rank must be at least 1");
}

std::vector<Root> RootSystem::roots() const {
  std::vector<Root> out;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (i != j) out.push_back({i, j});
  return out;
}

std::vector<Root> RootSystem::positive_roots() const {
  std::vector<Root> out;
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j) out.push_back({i, j});
  return out;
}

void RootSystem::check(Root a) const {
  if (a.i < 0 || a.j < 0 || a.i >= dim() || a.j >= dim() || a.i == a.j)
    throw ShapeError("invalid root index");
}

Mat RootSystem::root_vector(Root a) const {
  check(a);
  Mat x = Mat::Zero(dim(), dim());
  x(a.i, a.j) = weyl_scale();
  return x;
}

Mat RootSystem::a_vector(Root a) const { return root_vector(a) - root_vector(a.negative()); }
Mat RootSystem::s_vector(Root a) const { return root_vector(a) + root_vector(a.negative()); }
Mat RootSystem::z_vector(Root a) const { return kI * s_vector(a); }

Mat RootSystem::coroot(int k) const {
  if (k < 0 || k >= rank_) throw ShapeError("coroot index out of range");
  Mat x = Mat::Zero(dim(), dim());
  x(k, k) = 1.0;
  x(k + 1, k + 1) = -1.0;
  return x;
}

CartanVector::CartanVector(CVec diag) : diag_(std::move(diag)) {
  if (diag_.size() < 2) throw ShapeError("Cartan vector needs at least two entries");
  if (std::abs(diag_.sum()) > 1e-12 * std::max(1.0, diag_.norm()))
    throw ShapeError("Cartan vector entries must sum to zero");
}

CartanVector CartanVector::real(const std::vector<double>& h) {
  CVec d(static_cast<Eigen::Index>(h.size()));
  for (size_t k = 0; k < h.size(); ++k) d(static_cast<Eigen::Index>(k)) = h[k];
  return CartanVector(d);
}

bool CartanVector::is_real(double tol) const { return diag_.imag().cwiseAbs().maxCoeff() <= tol; }

std::optional<Root> CartanVector::degenerate_root(double tol) const {
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (std::abs(diag_(i) - diag_(j)) <= tol) return Root{i, j};
  return std::nullopt;
}

bool CartanVector::is_dominant_regular(double tol) const {
  if (!is_real(tol)) return false;
  for (int k = 0; k + 1 < size(); ++k)
    if (diag_(k).real() - diag_(k + 1).real() <= tol) return false;
  return true;
}

CartanVector minimal_h0(int n) {
  if (n < 1) throw ShapeError("rank must be at least 1");
  CVec d = CVec::Constant(n + 1, -1.0);
  d(0) = n;
  return CartanVector(d);
}

WeylElement::WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {
  std::vector<int> s = perm_;
  std::sort(s.begin(), s.end());
  for (int k = 0; k < static_cast<int>(s.size()); ++k)
    if (s[k] != k) throw ShapeError("not a permutation");
}

WeylElement WeylElement::identity(int size) {
  std::vector<int> p(size);
  std::iota(p.begin(), p.end(), 0);
  return WeylElement(p);
}

WeylElement WeylElement::longest(int size) {
  std::vector<int> p(size);
  for (int k = 0; k < size; ++k) p[k] = size - 1 - k;
  return WeylElement(p);
}

WeylElement WeylElement::transposition(int size, int a, int b) {
  auto w = identity(size);
  std::swap(w.perm_.at(a), w.perm_.at(b));
  return w;
}

WeylElement WeylElement::moving_first_to(int size, int j) {
  // 0 -> j, k -> k-1 for 1 <= k <= j
  auto w = identity(size);
  w.perm_.at(0) = j;
  for (int k = 1; k <= j; ++k) w.perm_[k] = k - 1;
  return w;
}

WeylElement WeylElement::inverse() const {
  std::vector<int> q(perm_.size());
  for (size_t i = 0; i < perm_.size(); ++i) q[perm_[i]] = static_cast<int>(i);
  return WeylElement(q);
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  if (o.size() != size()) throw ShapeError("Weyl elements of different rank");
  std::vector<int> q(perm_.size());
  for (size_t i = 0; i < perm_.size(); ++i) q[i] = perm_[o.perm_[i]];
  return WeylElement(q);
}

int WeylElement::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (perm_[i] > perm_[j]) ++inv;
  return inv;
}

Mat bracket(const Mat& x, const Mat& y) { return x * y - y * x; }
Mat tau(const Mat& x) { return -x.adjoint(); }

static void same_shape(const Mat& x, const Mat& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows() || x.rows() < 2)
    throw ShapeError("operands must be square matrices of the same size");
}

Cx killing_form(const Mat& x, const Mat& y) {
  same_shape(x, y);
  return killing_scale(static_cast<int>(x.rows()) - 1) * (x * y).trace();
}

Cx hermitian_form(const Mat& x, const Mat& y) {
  same_shape(x, y);
  // -<x, tau y> = c tr(x y^H)
  return killing_scale(static_cast<int>(x.rows()) - 1) * (x.array() * y.conjugate().array()).sum();
}

double b_tau(const Mat& x, const Mat& y) { return hermitian_form(x, y).real(); }
double omega(const Mat& x, const Mat& y) { return hermitian_form(x, y).imag(); }
double b_norm(const Mat& x) { return std::sqrt(std::max(0.0, b_tau(x, x))); }

Cx root_eval(Root a, const CartanVector& h) {
  if (a.i < 0 || a.j < 0 || a.i >= h.size() || a.j >= h.size() || a.i == a.j)
    throw ShapeError("invalid root index");
  return h[a.i] - h[a.j];
}

std::vector<Root> pi_w(const WeylElement& w) {
  std::vector<Root> out;
  for (int i = 0; i < w.size(); ++i)
    for (int j = i + 1; j < w.size(); ++j)
      if (w(i) > w(j)) out.push_back({i, j});
  return out;
}

CartanVector weyl_action(const WeylElement& w, const CartanVector& h) {
  if (w.size() != h.size()) throw ShapeError("Weyl element and Cartan vector sizes differ");
  CVec d(h.size());
  for (int i = 0; i < h.size(); ++i) d(w(i)) = h[i];
  return CartanVector(d);
}

bool is_traceless(const Mat& x, double tol) {
  return std::abs(x.trace()) <= tol * std::max(1.0, x.norm());
}

}  // namespace lgm
