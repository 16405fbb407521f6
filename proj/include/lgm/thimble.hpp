#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "lgm/graphs.hpp"

namespace lgm {

struct KaehlerGradients {
  Mat f1;  // gradient of Re f_H
  Mat f2;  // gradient of Im f_H
};
KaehlerGradients kaehler_gradients(const OrbitPoint& x, const CartanVector& h);

struct FgDecomposition {
  double residual = 0.0;           // ||F1 - (G1 - i G2)||
  double relative = 0.0;           // residual / ||F1||
  double g2_relative = 0.0;        // ||G2|| / ||F1||
  double f1_normal_relative = 0.0; // ||F1 - G1|| / ||F1||
  Mat g1, g2;
};
FgDecomposition fg_decomposition_check(const OrbitPoint& x, const GraphSpec& g, const CartanVector& h,
                                       double membership_tol = tol::kGraphMembership);

struct ThimbleOptions {
  double c_offset = 0.5;
  int directions = 64;
  int radii = 8;
  double r_min = 1e-4;
  double step = 0.02;     // arc-length cap per step
  int max_steps = 20000;  // per trajectory
  std::uint64_t seed = 1;
  double integrity_tol = tol::kIntegrity;
};

struct ThimbleSample {
  OrbitPoint point;
  double f1 = 0.0;
  double f2 = 0.0;
  double graph_residual = 0.0;
  int seed = -1;   // direction index, -1 for the critical point
  int radius = -1; // ladder index
  double arc = 0.0; // flow time from the seed
  bool boundary = false;
};

struct Thimble {
  int j = 0;
  Sign sign = Sign::Minus;
  CartanVector h;
  GraphSpec graph = GraphSpec::identity(1);
  double f1_critical = 0.0;
  double f2_critical = 0.0;
  double level = 0.0;
  double r_max = 0.0;
  std::vector<ThimbleSample> samples;
};

// chart line direction delta at e_j realizing each graph tangent vector
struct ThimbleSeeds {
  std::vector<CVec> deltas;  // unit B-length tangent per direction
  double r_max = 0.0;
  std::vector<double> radii;
};
ThimbleSeeds thimble_seeds(int j, const GraphSpec& g, const CartanVector& h, double level, const ThimbleOptions& opt);

// smallest and largest linear rates of the f1 gradient flow at [e_j] inside the graph
std::pair<double, double> f1_rates(const GraphSpec& g, int j, const CartanVector& h);

// one RK4 step of dx/dt = s F1 with stage retraction
OrbitPoint f1_step(const OrbitPoint& x, const CartanVector& h, double s, double dt);

struct FlowLine {
  std::vector<OrbitPoint> points;
  std::vector<double> times;
  bool reached = false;
};
FlowLine f1_flow_to_level(const OrbitPoint& x0, const CartanVector& h, double s, double level, double arc_cap,
                          double dt_cap, int max_steps);

Thimble trace_thimble(int j, Sign sign, const CartanVector& h, const ThimbleOptions& opt);

struct LagrangianCheck {
  double max_omega = 0.0;
  double max_nn_distance = 0.0;
  bool sparse = false;  // nn distance above 10 step somewhere
  long pairs = 0;
  int anchors = 0;
};
LagrangianCheck lagrangian_check(const std::vector<ThimbleSample>& samples, double step, int k = 4,
                                 int max_anchors = 2000);

struct HorizontalLift {
  double a = 0.0;
  double b = 0.0;
  double f1_norm = 0.0;
};
HorizontalLift horizontal_lift_check(const OrbitPoint& z, const CartanVector& h, double tol = 1e-8);
// max |Omega(F1, v)| / (|F1||v|) over random v in ker df ∩ T_z
double fibre_orthogonality(const OrbitPoint& z, const CartanVector& h, int count, std::mt19937_64& rng);

}  // namespace lgm
