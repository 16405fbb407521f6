#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lgm/orbit.hpp"

namespace lgm {

// Z(x) = [x, [tau x, H]]
Mat z_field(const Mat& x, const CartanVector& h);
inline Mat z_field(const OrbitPoint& x, const CartanVector& h) { return z_field(x.matrix(), h); }
// differential of z_field at x applied to v
Mat z_differential(const Mat& x, const CartanVector& h, const Mat& v);

// dh_H(v) = b_tau(v, H)
double dh(const CartanVector& h, const Mat& v);

double metric_m(const OrbitPoint& x, const Mat& u, const Mat& v, double tangency_tol = tol::kTransversality);

struct RootMode {
  Root root;           // positive root
  double rate = 0.0;   // alpha(x) alpha(H)
  bool degenerate = false;
  std::array<Mat, 2> minus;  // eigenvalue -|rate|
  std::array<Mat, 2> plus;   // eigenvalue +|rate|
};

struct LinearizationSpectrum {
  std::vector<RootMode> modes;
  std::vector<Mat> stable_basis() const;
  std::vector<Mat> unstable_basis() const;
  // tangent eigenvalues, each +-rate twice; degenerate roots contribute zeros
  std::vector<double> eigenvalues() const;
  int degenerate_count() const;
};

LinearizationSpectrum linearize(const OrbitPoint& x, const CartanVector& h, double tol = tol::kAlgebraic);

enum class Direction { Forward, Backward };

struct FlowOptions {
  double step = 0.0;  // 0 selects the default
  int max_steps = 10000;
  double conv_tol = tol::kConvergence;
  Direction direction = Direction::Forward;
  double max_drift = 0.5;
  bool throw_on_drift = true;  // false: stop and mark the trajectory escaped
};

// 1e-2 / max |alpha(wH0) alpha(H)|
double default_step(const CartanVector& h);

struct Trajectory {
  std::vector<double> times;
  std::vector<OrbitPoint> points;
  std::vector<double> h_values;     // Re f_H
  std::vector<double> f2_values;    // Im f_H
  std::vector<double> orbit_residuals;
  std::vector<double> z_norms;
  bool converged = false;
  bool escaped = false;
  std::optional<int> limit;  // critical point slot when converged
};

Trajectory integrate(const OrbitPoint& x0, const CartanVector& h, const FlowOptions& opt);

// Exact 2-form d(alpha) of alpha = b_tau(Z(.), .) at base, evaluated on (v, w).
double nongradient_witness(const CartanVector& h, const Mat& base, const Mat& v, const Mat& w);
// Closed form -2 b_tau(ad(H) ad(H1) tau w, v) antisymmetrized, at base H1.
double nongradient_closed_form(const CartanVector& h, const CartanVector& h1, const Mat& v, const Mat& w);
inline double nongradient_witness(const CartanVector& h, const CartanVector& h1, const Mat& v, const Mat& w) {
  return nongradient_witness(h, h1.matrix(), v, w);
}

// H_tau(Z(z + y), y)
Cx lemma_pairing(const CartanVector& z, const Mat& y, const CartanVector& h);

}  // namespace lgm
