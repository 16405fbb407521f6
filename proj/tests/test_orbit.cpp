#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unsupported/Eigen/MatrixFunctions>

#include "lgm/cycles.hpp"
#include "lgm/flow.hpp"
#include "lgm/graphs.hpp"
#include "lgm/oracles.hpp"
#include "lgm/orbit.hpp"
#include "lgm/random.hpp"
#include "lgm/tangent.hpp"

using namespace lgm;

namespace {
CVec unit(int dim, int k) {
  CVec e = CVec::Zero(dim);
  e(k) = 1.0;
  return e;
}
Mat span_except(int dim, int j) {
  Mat w(dim, dim - 1);
  int c = 0;
  for (int k = 0; k < dim; ++k)
    if (k != j) w.col(c++) = unit(dim, k);
  return w;
}
}  // namespace

TEST_CASE("phi_pair identity configuration") {
  for (int n = 1; n <= 5; ++n) {
    const OrbitPoint x = phi_pair(ProjLine(unit(n + 1, 0)), ProjHyperplane(span_except(n + 1, 0)));
    CHECK((x.matrix() - minimal_h0(n).matrix()).norm() < 1e-12);
    for (int j = 0; j <= n; ++j) {
      const OrbitPoint y = phi_pair(ProjLine(unit(n + 1, j)), ProjHyperplane(span_except(n + 1, j)));
      Mat want = -Mat::Identity(n + 1, n + 1);
      want(j, j) = n;
      CHECK((y.matrix() - want).norm() < 1e-12);
    }
  }
}

TEST_CASE("phi_pair on the twisted example") {
  CVec u(3);
  u << 2.0, 1.0, 0.0;
  u /= std::sqrt(5.0);
  const GraphSpec m = m_j_pm(2, 0, Sign::Plus);
  CHECK(std::abs(u.dot(m.matrix() * u) - 0.6) < 1e-12);
  const ProjHyperplane w = ProjHyperplane::orthogonal_to(m.matrix() * u);
  const OrbitPoint x = phi_pair(ProjLine(u), w);
  CHECK(x.residual() < 1e-12);
  CHECK(std::abs(x.matrix().trace()) < 1e-12);
  CHECK((x.matrix() * u - 2.0 * u).norm() < 1e-12);
  for (int k = 0; k < 2; ++k) CHECK((x.matrix() * w.basis().col(k) + w.basis().col(k)).norm() < 1e-12);
}

TEST_CASE("phi_pair rejects non-transversal pairs") {
  CHECK_THROWS_AS(phi_pair(ProjLine(unit(3, 1)), ProjHyperplane(span_except(3, 0))), TransversalityError);
}

TEST_CASE("split_eigen round trip and covariance") {
  Rng rng = make_rng(11, 0);
  const OrbitPoint h0 = critical_point(3, 0);
  const EigenSplit s0 = split_eigen(h0.matrix());
  CHECK(std::abs(std::abs(s0.line.vector()(0)) - 1.0) < 1e-12);
  for (int k = 0; k < 20; ++k) {
    const Mat g = random_su(3, rng);
    const Mat y = g * h0.matrix() * g.adjoint();
    const EigenSplit s = split_eigen(y);
    CHECK((phi_pair(s.line, s.hyperplane).matrix() - y).norm() < 1e-10);
    const CVec gu = g.col(0);
    CHECK((gu - s.line.vector().dot(gu) * s.line.vector()).norm() < 1e-10);
  }
  Mat bad = minimal_h0(2).matrix();
  bad(0, 0) -= 0.1;
  CHECK_THROWS_AS(split_eigen(bad), MembershipError);
}

TEST_CASE("orbit preserved by small complex conjugation") {
  Rng rng = make_rng(11, 1);
  for (int k = 0; k < 20; ++k) {
    Mat a = random_sl(2, rng);
    a *= 0.3 / a.norm();
    const Mat g = a.exp();
    const Mat y = g * minimal_h0(2).matrix() * g.inverse();
    CHECK(orbit_residual(y) < 1e-10);
    CHECK((OrbitPoint::from_matrix(y).matrix() - y).norm() < 1e-10);
  }
}

TEST_CASE("r_w0") {
  const ProjHyperplane w = r_w0(ProjLine(unit(3, 0)));
  CHECK(w.basis().col(0)(0) == Cx(0.0));
  Rng rng = make_rng(11, 2);
  for (int k = 0; k < 10; ++k) {
    const CVec u = random_vector(4, rng).normalized();
    const ProjHyperplane h = r_w0(ProjLine(u));
    CHECK((h.basis().adjoint() * u).norm() < 1e-12);
    const Mat x = phi_pair(ProjLine(u), h).matrix();
    CHECK((x - x.adjoint()).norm() < 1e-12);
  }
}

TEST_CASE("potential examples") {
  const CartanVector h = CartanVector::real({1, 0, -1});
  CHECK(std::abs(potential(h, critical_point(2, 0)) - 18.0) < 1e-12);
  CHECK(std::abs(potential(h, critical_point(2, 1))) < 1e-12);
  CHECK(std::abs(potential(h, critical_point(2, 2)) + 18.0) < 1e-12);
  const CartanVector h1 = CartanVector::real({1, -1});
  CHECK(std::abs(potential(h1, critical_point(1, 0)) - 8.0) < 1e-12);
  CHECK(std::abs(potential(h1, critical_point(1, 1)) + 8.0) < 1e-12);
  Rng rng = make_rng(11, 3);
  const OrbitPoint x = random_orbit_point(2, rng);
  CHECK(std::abs(potential(h, x) - killing_form(h.matrix(), x.matrix())) < 1e-12);
}

TEST_CASE("critical points") {
  for (int n = 1; n <= 6; ++n) {
    const auto cps = critical_points(minimal_h0(n));
    CHECK(static_cast<int>(cps.size()) == n + 1);
    std::vector<double> hv(n + 1);
    for (int k = 0; k <= n; ++k) hv[k] = n - 2.0 * k;
    const CartanVector h = CartanVector::real(hv);
    for (const auto& c : cps) {
      CHECK(z_field(c, h).norm() < 1e-12);
      const TangentSpace ts(c);
      for (const Mat& v : ts.real_basis()) CHECK(std::abs(b_tau(h.matrix(), v)) < 1e-12);
    }
  }
  CHECK_THROWS_AS(critical_points(CartanVector::real({2, 1, -3})), UnsupportedOrbitError);
}

TEST_CASE("retraction") {
  Rng rng = make_rng(11, 4);
  const OrbitPoint x = random_orbit_point(3, rng);
  const Mat y = x.matrix() + 1e-3 * random_matrix(4, rng);
  const OrbitPoint r = retract(y);
  CHECK(r.residual() < 1e-10);
  CHECK((r.matrix() - x.matrix()).norm() < 1e-1);
  CHECK_THROWS_AS(retract(Mat(10.0 * random_matrix(4, rng))), StepSizeError);
}

TEST_CASE("tangent space") {
  Rng rng = make_rng(11, 5);
  for (int n = 1; n <= 4; ++n) {
    const OrbitPoint x = random_orbit_point(n, rng);
    const TangentSpace ts(x);
    CHECK(ts.complex_dim() == 2 * n);
    const Mat v = random_matrix(n + 1, rng);
    const Mat p = ts.project(v);
    CHECK((p - ts.project(p)).norm() < 1e-12);
    CHECK(AdInverse(x.matrix()).off_image(p) < 1e-10);
    CHECK((p - oracle::svd_tangent_projection(x.matrix(), v)).norm() < 1e-10 * v.norm());
  }
}

TEST_CASE("flag points are hermitian") {
  Rng rng = make_rng(11, 6);
  for (const auto& p : flag_sample(3, 20, 1.0, rng)) {
    CHECK((p.matrix() - p.matrix().adjoint()).norm() < 1e-12);
    CHECK(p.residual() < 1e-10);
  }
}
