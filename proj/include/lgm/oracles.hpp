#pragma once

// Reference computations that avoid the closed forms used by the library.

#include <vector>

#include "lgm/graphs.hpp"

namespace lgm::oracle {

// tr(ad X ∘ ad Y) over a complex basis of sl(n+1)
Cx adjoint_trace_killing(const Mat& x, const Mat& y);
// trace form of the realified algebra over a real basis of sl(n+1) as a real algebra
double realified_killing(const Mat& x, const Mat& y);

// real orthonormal (b_tau) basis of sl(n+1) viewed as a real vector space
RMat sl_real_basis(int n);

// eigenvalues of the central-difference Jacobian of Z on realified sl(n+1)
std::vector<Cx> fd_jacobian_eigenvalues(const Mat& x, const CartanVector& h, double step = 1e-5);

// projection onto im ad(x) through the SVD of ad(x)
Mat svd_tangent_projection(const Mat& x, const Mat& v);

// d²/dt² f_H(Ad(exp(tA)) x) at t = 0, central differences
Cx fd_second_derivative(const Mat& a, const Mat& x, const CartanVector& h, double step = 1e-4);

// point of the graph on the chart ray e_j + t delta with f1 = level (bisection in t)
struct RayPoint {
  OrbitPoint point;
  double t = 0.0;
  bool found = false;
};
RayPoint level_point_on_ray(int j, const GraphSpec& g, const CartanVector& h, const CVec& delta, double level,
                            double t_max = 50.0);

}  // namespace lgm::oracle
