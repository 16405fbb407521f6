#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lgm/orbit.hpp"

namespace lgm {

enum class Sign { Plus, Minus };
std::string to_string(Sign s);

class GraphSpec {
 public:
  explicit GraphSpec(CVec m);
  static GraphSpec identity(int n);

  const CVec& diag() const { return m_; }
  Mat matrix() const { return m_.asDiagonal(); }
  int dim() const { return static_cast<int>(m_.size()); }
  Cx det() const { return m_.prod(); }
  bool in_torus(double tol = 1e-12) const { return std::abs(det() - 1.0) <= tol; }
  bool is_involution(double tol = 1e-12) const;
  std::vector<double> phases() const;
  // exp(-i alpha_kj(H1)) = m_j / m_k
  Cx root_factor(int k, int j) const { return m_(j) * std::conj(m_(k)); }

 private:
  CVec m_;
};

// j is 0-based; for odd n only the end slots are allowed
GraphSpec m_j_pm(int n, int j, Sign s);

// pair chart twisted by a diagonal d: line u, hyperplane ker(u^H d)
Mat chart_matrix(const CVec& u, const CVec& d);
Mat chart_derivative(const CVec& u, const CVec& d, const CVec& delta);
OrbitPoint twisted_point(const CVec& u, const CVec& d, double tol = tol::kTransversality);

// Phi([u], m [u]^⟂)
OrbitPoint graph_point(const CVec& u, const GraphSpec& g, double tol = tol::kTransversality);
double graph_membership(const OrbitPoint& x, const GraphSpec& g);
// second-factor action of m^-1: (u, W) -> (u, m^-1 W)
OrbitPoint untwist(const OrbitPoint& x, const GraphSpec& g);
// Hermitian test of the zero section
double hermitian_residual(const OrbitPoint& x);

// B-orthonormal real basis of T_x of the graph, from the chart derivative
RMat graph_tangent_space(const OrbitPoint& x, const GraphSpec& g);

struct GraphTangent {
  std::vector<int> k;            // root alpha_kj per pair
  std::vector<Mat> generators;   // X_a - e X_-a, i(X_a + e X_-a)
  std::vector<Mat> vectors;      // [generator, x]
};
GraphTangent graph_tangent_basis(const GraphSpec& g, int j);

// -<[B, wH0], [A, H]>
Cx hessian_full(const Mat& A, const Mat& B, const WeylElement& w, const CartanVector& h);
Cx hessian_full(const Mat& A, const Mat& B, const Mat& critical, const CartanVector& h);

enum class Definiteness { Positive, Negative, Indefinite, Complex };
std::string to_string(Definiteness d);

struct HessianRow {
  int k = 0;
  Cx alpha_x;
  Cx alpha_h;
  Cx factor;  // exp(-i alpha(H1))
  Cx value;
  int multiplicity = 2;
};

struct HessianReport {
  int j = 0;
  std::optional<Sign> sign;
  std::vector<HessianRow> rows;
  Definiteness definiteness = Definiteness::Indefinite;
};

HessianReport hessian_restricted(const CartanVector& h, int j, const GraphSpec& g);

struct RealityResult {
  double max_im_f = 0.0;
  double max_im_diag = 0.0;
  int samples = 0;
  int rejected = 0;
};

RealityResult reality_check(const CartanVector& h, const GraphSpec& g, int samples, std::mt19937_64& rng,
                            double reject = tol::kSamplingTransversality);
RealityResult reality_check_diagonal(const CartanVector& h, const RVec& d, int samples, std::mt19937_64& rng,
                                     double reject = tol::kSamplingTransversality);

}  // namespace lgm
