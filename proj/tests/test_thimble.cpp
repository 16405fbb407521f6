#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lgm/cycles.hpp"
#include "lgm/random.hpp"
#include "lgm/tangent.hpp"
#include "lgm/thimble.hpp"

using namespace lgm;

namespace {
const CartanVector kH = CartanVector::real({1, 0, -1});

ThimbleOptions small() {
  ThimbleOptions o;
  o.directions = 12;
  o.radii = 3;
  return o;
}
}  // namespace

TEST_CASE("kaehler gradients") {
  for (const auto& c : critical_points(2)) {
    const auto g = kaehler_gradients(c, kH);
    CHECK(b_norm(g.f1) < 1e-12);
    CHECK(b_norm(g.f2) < 1e-12);
  }
  Rng rng = make_rng(13, 0);
  for (int k = 0; k < 100; ++k) {
    const OrbitPoint x = random_orbit_point(2, rng);
    const auto g = kaehler_gradients(x, kH);
    CHECK(b_norm(g.f2 - kI * g.f1) < 1e-10 * b_norm(g.f1));
  }
}

TEST_CASE("hessian of f1 has balanced index at critical points") {
  for (const auto& c : critical_points(2)) {
    const auto basis = TangentSpace(c).real_basis();
    const int d = static_cast<int>(basis.size());
    RMat hess(d, d);
    const double eps = 1e-4;
    auto f1 = [&](const Mat& v) { return potential(kH, retract(Mat(c.matrix() + v))).real(); };
    const double f0 = potential(kH, c).real();
    // second derivative along exact orbit curves x + v + O(v^2) via the retraction
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const Mat p = eps * (basis[a] + basis[b]), m = eps * (basis[a] - basis[b]);
        hess(a, b) = (f1(p) + f1(Mat(-p)) - f1(m) - f1(Mat(-m))) / (8 * eps * eps);
      }
    (void)f0;
    const RVec ev = Eigen::SelfAdjointEigenSolver<RMat>(hess).eigenvalues();
    int pos = 0, neg = 0;
    for (int k = 0; k < d; ++k) {
      pos += ev(k) > 1e-3;
      neg += ev(k) < -1e-3;
    }
    CHECK(pos == neg);
  }
}

TEST_CASE("F/G decomposition on involution graphs") {
  Rng rng = make_rng(13, 1);
  std::vector<GraphSpec> graphs = {GraphSpec::identity(2)};
  for (int j = 0; j <= 2; ++j)
    for (Sign s : {Sign::Plus, Sign::Minus}) graphs.push_back(m_j_pm(2, j, s));
  for (const auto& g : graphs)
    for (int k = 0; k < 30; ++k) {
      const OrbitPoint x = graph_point(random_vector(3, rng), g);
      const auto fg = fg_decomposition_check(x, g, kH);
      CHECK(fg.relative < 1e-8);
      CHECK(fg.g2_relative < 1e-8);
      CHECK(fg.f1_normal_relative < 1e-8);
    }
  const auto at_crit = fg_decomposition_check(critical_point(2, 0), GraphSpec::identity(2), kH);
  CHECK(at_crit.residual < 1e-12);
  CHECK_THROWS_AS(fg_decomposition_check(random_orbit_point(2, rng), m_j_pm(2, 0, Sign::Plus), kH), MembershipError);
}

TEST_CASE("F/G decomposition fails on a non-involution graph") {
  // the graph of a generic torus element is not Lagrangian, so the splitting breaks down
  Rng rng = make_rng(13, 2);
  const GraphSpec g(CVec((CVec(3) << std::polar(1.0, 0.7), std::polar(1.0, -0.2), std::polar(1.0, -0.5)).finished()));
  double worst = 0.0;
  for (int k = 0; k < 30; ++k) {
    const OrbitPoint x = graph_point(random_vector(3, rng), g);
    worst = std::max(worst, fg_decomposition_check(x, g, kH).relative);
  }
  CHECK(worst > 1e-4);
}

TEST_CASE("thimble containment at n=2, j=1, minus") {
  const Thimble t = trace_thimble(0, Sign::Minus, kH, small());
  CHECK(t.f1_critical == doctest::Approx(18));
  CHECK(t.level == doctest::Approx(17.5));
  REQUIRE(t.samples.size() > 10);
  CHECK(t.samples[0].seed == -1);
  int boundary = 0;
  for (const auto& s : t.samples) {
    CHECK(s.graph_residual < 1e-6);
    CHECK(std::abs(s.f2) < 1e-8);
    CHECK(s.f1 >= 17.5 - 1e-9);
    CHECK(s.f1 <= 18 + 1e-12);
    boundary += s.boundary;
  }
  CHECK(boundary == 12 * 3);
  const auto lc = lagrangian_check(t.samples, 0.02);
  CHECK(lc.max_omega < 1e-5);
}

TEST_CASE("thimble for the plus sign rises to its level") {
  const Thimble t = trace_thimble(1, Sign::Plus, kH, small());
  CHECK(t.level == doctest::Approx(0.5));
  for (const auto& s : t.samples) {
    CHECK(s.f1 >= -1e-12);
    CHECK(s.f1 <= 0.5 + 1e-9);
  }
}

TEST_CASE("tiny offset collapses the thimble") {
  ThimbleOptions o = small();
  o.c_offset = 1e-10;
  const Thimble t = trace_thimble(0, Sign::Minus, kH, o);
  for (const auto& s : t.samples) CHECK(b_norm(s.point.matrix() - critical_point(2, 0).matrix()) < 1e-3);
}

TEST_CASE("boundary samples lie on the level") {
  const Thimble t = trace_thimble(2, Sign::Minus, kH, small());
  for (const auto& s : t.samples)
    if (s.boundary) CHECK(std::abs(s.f1 - t.level) < 1e-8);
}

TEST_CASE("lagrangian check on the zero section") {
  Rng rng = make_rng(13, 3);
  std::vector<ThimbleSample> zs;
  for (int k = 0; k < 400; ++k) {
    CVec u = CVec::Zero(3);
    u(0) = 1.0;
    u += 0.3 * random_vector(3, rng);
    ThimbleSample s{graph_point(u, GraphSpec::identity(2))};
    s.seed = k;
    zs.push_back(s);
  }
  CHECK(lagrangian_check(zs, 0.05).max_omega < 1e-6);
  // two samples: the only secant pairs with itself
  std::vector<ThimbleSample> two(zs.begin(), zs.begin() + 2);
  CHECK(lagrangian_check(two, 0.05).max_omega < 1e-12);
}

TEST_CASE("horizontal lift") {
  Rng rng = make_rng(13, 4);
  for (int k = 0; k < 100; ++k) {
    const OrbitPoint z = random_orbit_point(2, rng);
    const auto l = horizontal_lift_check(z, kH);
    CHECK(std::abs(l.b) < 1e-10);
    CHECK(l.a > 0);
    CHECK(l.a == doctest::Approx(1.0 / (l.f1_norm * l.f1_norm)));
  }
  Rng r2 = make_rng(13, 5);
  for (int k = 0; k < 5; ++k) CHECK(fibre_orthogonality(random_orbit_point(2, r2), kH, 20, r2) < 1e-10);
  CHECK_THROWS_AS(horizontal_lift_check(critical_point(2, 0), kH), ConditioningError);
}
