#include "lgm/cycles.hpp"

#include <algorithm>
#include <cmath>

#include "lgm/realspace.hpp"
#include "lgm/tangent.hpp"

namespace lgm {

VwSubspace build_vw(const WeylElement& w) {
  const int n = w.size() - 1;
  const RootSystem rs(n);
  VwSubspace out{w, {}, {}};
  for (int k = 0; k < n; ++k) {
    out.basis.push_back(rs.coroot(k));
    out.kinds.push_back(BlockKind::Cartan);
  }
  const auto inv = pi_w(w);
  for (const Root a : rs.positive_roots()) {
    if (std::find(inv.begin(), inv.end(), a) != inv.end()) {
      out.basis.push_back(rs.a_vector(a));
      out.basis.push_back(rs.z_vector(a));
      out.kinds.insert(out.kinds.end(), 2, BlockKind::Compact);
    } else {
      out.basis.push_back(kI * rs.a_vector(a));
      out.basis.push_back(rs.s_vector(a));
      out.kinds.insert(out.kinds.end(), 2, BlockKind::Noncompact);
    }
  }
  return out;
}

std::vector<Mat> delta_w(const WeylElement& w, const OrbitPoint& x, double cutoff) {
  if (w.size() != x.dim()) throw ShapeError("delta_w: size mismatch");
  const RMat qa = real_span(build_vw(w).basis);
  const RMat qb = TangentSpace(x).real_basis_matrix();
  return to_matrices(intersect(qb, qa, cutoff), x.dim());
}

Mat grad_height(const Mat& X, const OrbitPoint& x) { return TangentSpace(x).project(X); }
Mat ham_height(const Mat& X, const OrbitPoint& x) { return -kI * grad_height(X, x); }

std::vector<Mat> delta_w_generators(const WeylElement& w) {
  const RootSystem rs(w.size() - 1);
  const auto inv = pi_w(w);
  std::vector<Mat> out;
  for (const Root a : rs.positive_roots()) {
    if (std::find(inv.begin(), inv.end(), a) != inv.end()) {
      out.push_back(kI * rs.a_vector(a));
      out.push_back(rs.s_vector(a));
    } else {
      out.push_back(rs.a_vector(a));
      out.push_back(rs.z_vector(a));
    }
  }
  return out;
}

static Mat exp_compact(const Mat& A) {
  // A anti-Hermitian: A = -i K with K Hermitian
  Eigen::SelfAdjointEigenSolver<Mat> es(Mat(kI * A));
  const RVec& lam = es.eigenvalues();
  CVec ph(lam.size());
  for (Eigen::Index k = 0; k < lam.size(); ++k) ph(k) = std::exp(-kI * lam(k));
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

OrbitPoint flag_point(const Mat& A) {
  if ((A + A.adjoint()).norm() > 1e-12 * std::max(1.0, A.norm()))
    throw ShapeError("flag_point: generator must be anti-Hermitian");
  const int n = static_cast<int>(A.rows()) - 1;
  return conjugate(exp_compact(A), critical_point(n, 0));
}

Mat random_compact(int n, double r, Rng& rng) {
  std::normal_distribution<double> nd;
  Mat g(n + 1, n + 1);
  for (Eigen::Index k = 0; k < g.size(); ++k) g(k) = Cx(nd(rng), nd(rng));
  Mat a = 0.5 * (g - g.adjoint());
  a -= (a.trace() / static_cast<double>(n + 1)) * Mat::Identity(n + 1, n + 1);
  return a * (r / b_norm(a));
}

std::vector<OrbitPoint> flag_sample(int n, int count, double radius, Rng& rng) {
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  std::vector<OrbitPoint> out;
  for (int k = 0; k < count; ++k) {
    const double r = radius * ud(rng);
    out.push_back(flag_point(r > 0 ? random_compact(n, r, rng) : Mat(Mat::Zero(n + 1, n + 1))));
  }
  return out;
}

std::vector<SpherePoint> vanishing_sphere(const CartanVector& h, double c, int count, Rng& rng, double level_tol) {
  const int n = h.rank();
  if (!h.is_dominant_regular()) throw ConfigError("vanishing_sphere: H must be dominant regular");
  const double top = potential(h, critical_point(n, 0)).real();
  const double next = potential(h, critical_point(n, 1)).real();
  if (!(c < top && c > next)) throw LevelRangeError("level must lie strictly between the two largest critical values");
  std::normal_distribution<double> nd;
  std::vector<SpherePoint> out;
  for (int s = 0; s < count; ++s) {
    CVec d(n);
    for (int k = 0; k < n; ++k) d(k) = Cx(nd(rng), nd(rng));
    d.normalize();
    Mat A = Mat::Zero(n + 1, n + 1);
    for (int k = 1; k <= n; ++k) {
      A(k, 0) = d(k - 1);
      A(0, k) = -std::conj(d(k - 1));
    }
    auto f_at = [&](double t) { return potential(h, flag_point(Mat(t * A))).real(); };
    double lo = 0.0, hi = 0.5 * M_PI;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = f_at(mid);
      if (fm >= c) lo = mid; else hi = mid;
      if (std::abs(fm - c) <= level_tol * std::max(1.0, std::abs(c))) {
        lo = mid;
        break;
      }
    }
    out.push_back({flag_point(Mat(lo * A)), A, lo});
  }
  return out;
}

}  // namespace lgm
