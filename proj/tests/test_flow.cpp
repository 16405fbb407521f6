#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unsupported/Eigen/MatrixFunctions>

#include "lgm/flow.hpp"
#include "lgm/oracles.hpp"
#include "lgm/random.hpp"
#include "lgm/realspace.hpp"
#include "lgm/tangent.hpp"

using namespace lgm;

TEST_CASE("z field vanishes at critical points and is tangent") {
  const CartanVector h = CartanVector::real({1, 0, -1});
  for (const auto& c : critical_points(2)) CHECK(z_field(c, h).norm() < 1e-12);
  Rng rng = make_rng(3, 0);
  for (int k = 0; k < 20; ++k) {
    const OrbitPoint x = random_orbit_point(2, rng);
    CHECK(AdInverse(x.matrix()).off_image(z_field(x, h)) < 1e-10);
  }
}

TEST_CASE("z field descends h at a perturbed n=1 point") {
  const RootSystem rs(1);
  const Mat g = (0.1 * rs.root_vector({0, 1})).exp();
  const OrbitPoint x = OrbitPoint::from_matrix(g * minimal_h0(1).matrix() * g.inverse());
  const CartanVector h = CartanVector::real({1, -1});
  const Mat z = z_field(x, h);
  CHECK(z.norm() > 1e-6);
  CHECK(dh(h, z) < 0);
}

TEST_CASE("metric examples") {
  const OrbitPoint x = critical_point(1, 0);
  const RootSystem rs(1);
  const Mat u = bracket(rs.root_vector({0, 1}), x.matrix());
  CHECK(std::abs(metric_m(x, u, u) - 1.0) < 1e-12);
  Rng rng = make_rng(3, 1);
  for (int k = 0; k < 100; ++k) {
    const OrbitPoint y = random_orbit_point(2, rng);
    const Mat v = random_tangent(y, rng), w = random_tangent(y, rng);
    CHECK(metric_m(y, v, v) > 0);
    CHECK(std::abs(metric_m(y, v, w) - metric_m(y, w, v)) < 1e-10);
  }
  CHECK_THROWS_AS(metric_m(x, Mat(minimal_h0(1).matrix()), u), TangencyError);
}

TEST_CASE("gradient identity") {
  Rng rng = make_rng(3, 2);
  for (int n = 1; n <= 2; ++n) {
    std::vector<double> hv(n + 1);
    for (int k = 0; k <= n; ++k) hv[k] = n - 2.0 * k + 0.1 * k * k;
    double s = 0;
    for (double v : hv) s += v;
    for (double& v : hv) v -= s / (n + 1);
    const CartanVector h = CartanVector::real(hv);
    for (int k = 0; k < 100; ++k) {
      const OrbitPoint x = random_orbit_point(n, rng);
      const Mat v = random_tangent(x, rng);
      CHECK(std::abs(dh(h, v) + metric_m(x, v, z_field(x, h))) < 1e-10);
    }
  }
}

TEST_CASE("linearization examples") {
  const CartanVector h1 = CartanVector::real({1, -1});
  const auto s1 = linearize(critical_point(1, 0), minimal_h0(1));
  auto ev = s1.eigenvalues();
  std::sort(ev.begin(), ev.end());
  REQUIRE(ev.size() == 4);
  CHECK(ev[0] == doctest::Approx(-4));
  CHECK(ev[1] == doctest::Approx(-4));
  CHECK(ev[2] == doctest::Approx(4));
  CHECK(ev[3] == doctest::Approx(4));
  (void)h1;

  const CartanVector h = CartanVector::real({1, 0, -1});
  const auto s2 = linearize(critical_point(2, 0), h);
  REQUIRE(s2.modes.size() == 3);
  for (const auto& m : s2.modes) {
    if (m.root == Root{0, 1}) CHECK(m.rate == doctest::Approx(3));
    if (m.root == Root{0, 2}) CHECK(m.rate == doctest::Approx(6));
    if (m.root == Root{1, 2}) CHECK(m.degenerate);
  }
  CHECK(s2.degenerate_count() == 1);

  // stable space at H0 lies in the compact form
  const auto sp = linearize(critical_point(2, 0), h);
  std::vector<Mat> compact;
  const RootSystem rs(2);
  for (Root a : {Root{0, 1}, Root{0, 2}}) {
    compact.push_back(rs.a_vector(a));
    compact.push_back(rs.z_vector(a));
  }
  const RVec sines = principal_sines(real_span(sp.stable_basis()), real_span(compact));
  CHECK(sines.maxCoeff() < 1e-10);
  Rng rng = make_rng(3, 3);
  CHECK_THROWS_AS(linearize(random_orbit_point(2, rng), h), NotASingularityError);
}

TEST_CASE("jacobian oracle matches analytic spectrum") {
  const CartanVector h = CartanVector::real({1, 0, -1});
  for (const auto& c : critical_points(2)) {
    const auto sp = linearize(c, h);
    auto fd = oracle::fd_jacobian_eigenvalues(c.matrix(), h);
    std::vector<double> want = sp.eigenvalues();
    want.resize(fd.size(), 0.0);  // directions off the tangent space
    std::sort(want.begin(), want.end());
    std::sort(fd.begin(), fd.end(), [](Cx a, Cx b) { return a.real() < b.real(); });
    REQUIRE(fd.size() == want.size());
    for (size_t k = 0; k < fd.size(); ++k) CHECK(std::abs(fd[k] - want[k]) < 1e-6);
  }
}

TEST_CASE("stable and unstable subspaces are isotropic") {
  const CartanVector h = CartanVector::real({2, 1, -1, -2});
  for (const auto& c : critical_points(3)) {
    const auto sp = linearize(c, h);
    for (const auto& b : {sp.stable_basis(), sp.unstable_basis()})
      for (size_t p = 0; p < b.size(); ++p)
        for (size_t q = 0; q < b.size(); ++q) CHECK(std::abs(omega(b[p], b[q])) < 1e-10);
  }
}

TEST_CASE("integration") {
  const CartanVector h = CartanVector::real({1, -1});
  FlowOptions o;
  const Trajectory t0 = integrate(critical_point(1, 0), h, o);
  CHECK(t0.points.size() == 1);
  CHECK(t0.converged);

  const RootSystem rs(1);
  const OrbitPoint c = critical_point(1, 0);
  const OrbitPoint x0 = retract(Mat(c.matrix() + 1e-3 * rs.a_vector({0, 1})));
  const Trajectory fw = integrate(x0, h, o);
  CHECK(fw.converged);
  REQUIRE(fw.limit.has_value());
  CHECK(*fw.limit == 0);
  for (size_t k = 1; k < fw.h_values.size(); ++k) CHECK(fw.h_values[k] <= fw.h_values[k - 1] + 1e-12);
  for (double r : fw.orbit_residuals) CHECK(r < 1e-8);

  // the stable direction repels under the backward flow
  FlowOptions b;
  b.direction = Direction::Backward;
  b.max_steps = 50;
  const Trajectory bw = integrate(x0, h, b);
  CHECK(b_norm(bw.points.back().matrix() - c.matrix()) > b_norm(x0.matrix() - c.matrix()));
}

TEST_CASE("step size error on runaway flow") {
  Rng rng = make_rng(3, 4);
  FlowOptions o;
  o.step = 5.0;
  o.max_steps = 5;
  CHECK_THROWS_AS(integrate(random_orbit_point(2, rng), CartanVector::real({1, 0, -1}), o), StepSizeError);
}

TEST_CASE("non-gradient witness") {
  const RootSystem rs(1);
  const Mat v = rs.root_vector({0, 1});
  const CartanVector h = CartanVector::real({1, -1});
  const CartanVector h1(CVec((CVec(2) << kI, -kI).finished()));
  CHECK(nongradient_witness(h, h1, v, v) == doctest::Approx(0).epsilon(1e-15));
  const CartanVector zero(CVec::Zero(2));
  CHECK(nongradient_witness(h, zero, v, Mat(kI * v)) == doctest::Approx(0).epsilon(1e-15));
  // at a generic base point the antisymmetrized pairing does not vanish
  Rng rng = make_rng(3, 5);
  CHECK(nongradient_witness(h, random_sl(1, rng), random_sl(1, rng), random_sl(1, rng)) > 1e-3);
}

TEST_CASE("sign lemma with the z reading") {
  Rng rng = make_rng(3, 6);
  const CartanVector h = CartanVector::real({1, 0, -1});
  const CartanVector z = CartanVector::real({1.5, -0.25, -1.25});
  for (int k = 0; k < 20; ++k) {
    const Mat y = 0.05 * random_antihermitian_sl(2, rng);
    const Cx v = lemma_pairing(z, y, h);
    CHECK(v.real() < 0);
    CHECK(std::abs(v.imag()) < 1e-12 * std::max(1.0, std::abs(v)));
  }
}
