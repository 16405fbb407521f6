#pragma once

#include <optional>
#include <vector>

#include "lgm/core.hpp"

namespace lgm {

// Root alpha_ij, indices 0-based.  Positive iff i < j.
struct Root {
  int i = 0;
  int j = 1;
  bool positive() const { return i < j; }
  Root negative() const { return {j, i}; }
  bool operator==(const Root&) const = default;
};

double killing_scale(int n);  // 2(n+1)
double weyl_scale(int n);     // 1/sqrt(2(n+1))

class RootSystem {
 public:
  explicit RootSystem(int rank);

  int rank() const { return rank_; }
  int dim() const { return rank_ + 1; }
  double killing_scale() const { return lgm::killing_scale(rank_); }
  double weyl_scale() const { return lgm::weyl_scale(rank_); }

  std::vector<Root> roots() const;
  std::vector<Root> positive_roots() const;

  Mat root_vector(Root a) const;  // X_a = s E_ij
  Mat a_vector(Root a) const;     // X_a - X_-a
  Mat s_vector(Root a) const;     // X_a + X_-a
  Mat z_vector(Root a) const;     // i S_a
  // E_kk - E_{k+1,k+1}, k = 0..n-1
  Mat coroot(int k) const;

 private:
  void check(Root a) const;
  int rank_;
};

class CartanVector {
 public:
  CartanVector() = default;
  explicit CartanVector(CVec diag);
  static CartanVector real(const std::vector<double>& h);

  int size() const { return static_cast<int>(diag_.size()); }
  int rank() const { return size() - 1; }
  Cx operator[](int k) const { return diag_(k); }
  const CVec& diag() const { return diag_; }
  Mat matrix() const { return diag_.asDiagonal(); }
  bool is_real(double tol = tol::kAlgebraic) const;

  // first root (i<j) with |alpha(H)| <= tol
  std::optional<Root> degenerate_root(double tol = tol::kAlgebraic) const;
  bool is_regular(double tol = tol::kAlgebraic) const { return !degenerate_root(tol); }
  bool is_dominant_regular(double tol = tol::kAlgebraic) const;

 private:
  CVec diag_;
};

// diag(n, -1, ..., -1)
CartanVector minimal_h0(int n);

// Permutation w of {0..n}; perm[i] = w(i).
class WeylElement {
 public:
  explicit WeylElement(std::vector<int> perm);
  static WeylElement identity(int size);
  static WeylElement longest(int size);
  static WeylElement transposition(int size, int a, int b);
  // smallest-length element taking 0 to slot j: cycles 0 -> j
  static WeylElement moving_first_to(int size, int j);

  int size() const { return static_cast<int>(perm_.size()); }
  int operator()(int i) const { return perm_[i]; }
  const std::vector<int>& perm() const { return perm_; }
  WeylElement inverse() const;
  WeylElement operator*(const WeylElement& o) const;  // (this o o)(i) = this(o(i))
  int length() const;
  bool operator==(const WeylElement&) const = default;

 private:
  std::vector<int> perm_;
};

Mat bracket(const Mat& x, const Mat& y);
Mat tau(const Mat& x);

Cx killing_form(const Mat& x, const Mat& y);
Cx hermitian_form(const Mat& x, const Mat& y);
double b_tau(const Mat& x, const Mat& y);
double omega(const Mat& x, const Mat& y);
double b_norm(const Mat& x);

Cx root_eval(Root a, const CartanVector& h);
std::vector<Root> pi_w(const WeylElement& w);
CartanVector weyl_action(const WeylElement& w, const CartanVector& h);

bool is_traceless(const Mat& x, double tol = 1e-12);

}  // namespace lgm
