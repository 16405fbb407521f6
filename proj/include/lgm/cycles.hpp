#pragma once

#include <vector>

#include "lgm/random.hpp"

namespace lgm {

enum class BlockKind { Cartan, Compact, Noncompact };

struct VwSubspace {
  WeylElement w;
  std::vector<Mat> basis;
  std::vector<BlockKind> kinds;
  int dim() const { return static_cast<int>(basis.size()); }
};

// h_R part, {A_a, Z_a : a in Pi_w}, {iA_a, S_a : a in Pi+ \ Pi_w}
VwSubspace build_vw(const WeylElement& w);

// V_w ∩ T_x O as B-orthonormal real tangent vectors
std::vector<Mat> delta_w(const WeylElement& w, const OrbitPoint& x, double cutoff = tol::kIntersection);

// gradient of f_X = b_tau(X, .) on the orbit, and ham = -i grad
Mat grad_height(const Mat& X, const OrbitPoint& x);
Mat ham_height(const Mat& X, const OrbitPoint& x);
// generators whose ham fields span Delta_w(wH0)
std::vector<Mat> delta_w_generators(const WeylElement& w);

// exp(A) H0 exp(-A) for anti-Hermitian A
OrbitPoint flag_point(const Mat& A);
// random anti-Hermitian traceless A with ||A||_B = r
Mat random_compact(int n, double r, Rng& rng);
std::vector<OrbitPoint> flag_sample(int n, int count, double radius, Rng& rng);

struct SpherePoint {
  OrbitPoint point;
  Mat generator;  // A with point = Ad(exp(tA)) H0, unit direction
  double t = 0.0;
};
// level set f1 = c near H0 on the flag, by bisection along geodesics
std::vector<SpherePoint> vanishing_sphere(const CartanVector& h, double c, int count, Rng& rng,
                                          double level_tol = 1e-12);

}  // namespace lgm
