#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lgm/cycles.hpp"
#include "lgm/random.hpp"
#include "lgm/realspace.hpp"
#include "lgm/tangent.hpp"

using namespace lgm;

TEST_CASE("V_w examples") {
  const VwSubspace id = build_vw(WeylElement::identity(2));
  CHECK(id.dim() == 3);
  int noncompact = 0;
  for (auto k : id.kinds) noncompact += k == BlockKind::Noncompact;
  CHECK(noncompact == 2);
  const VwSubspace top = build_vw(WeylElement::longest(2));
  int compact = 0;
  for (auto k : top.kinds) compact += k == BlockKind::Compact;
  CHECK(compact == 2);
  const RootSystem rs(1);
  CHECK(principal_sines(real_span(std::vector<Mat>{top.basis[1], top.basis[2]}),
                        real_span(std::vector<Mat>{rs.a_vector({0, 1}), rs.z_vector({0, 1})}))
            .maxCoeff() < 1e-12);
}

TEST_CASE("V_w dimensions and reality for every w at n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> p(n + 1);
    std::iota(p.begin(), p.end(), 0);
    do {
      const VwSubspace v = build_vw(WeylElement(p));
      CHECK(v.dim() == n + n * (n + 1));
      CHECK(real_span(v.basis).cols() == v.dim());
      for (int a = 0; a < v.dim(); ++a)
        for (int b = 0; b < v.dim(); ++b) {
          CHECK(std::abs(hermitian_form(v.basis[a], v.basis[b]).imag()) < 1e-12);
          const double k = killing_form(v.basis[a], v.basis[b]).real();
          if (a == b) CHECK((v.kinds[a] == BlockKind::Compact ? k < 0 : k > 0));
        }
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST_CASE("Delta_w at wH0") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> p(n + 1);
    std::iota(p.begin(), p.end(), 0);
    do {
      const WeylElement w(p);
      const OrbitPoint x = OrbitPoint::from_matrix(weyl_action(w, minimal_h0(n)).matrix());
      const auto d = delta_w(w, x);
      CHECK(static_cast<int>(d.size()) == 2 * n);
      for (size_t a = 0; a < d.size(); ++a)
        for (size_t b = 0; b < d.size(); ++b) CHECK(std::abs(omega(d[a], d[b])) < 1e-10);
      std::vector<Mat> hams;
      for (const Mat& X : delta_w_generators(w)) {
        const Mat h = ham_height(X, x);
        if (b_norm(h) > 1e-12) hams.push_back(h);
      }
      const RMat qa = real_span(hams), qb = real_span(d);
      CHECK(qa.cols() == qb.cols());
      CHECK(principal_sines(qa, qb).maxCoeff() < 1e-8);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  Rng rng = make_rng(5, 0);
  for (int k = 0; k < 5; ++k) CHECK(delta_w(WeylElement::identity(3), random_orbit_point(2, rng)).size() <= 2);
}

TEST_CASE("gradient and hamiltonian fields") {
  Rng rng = make_rng(5, 1);
  for (int k = 0; k < 50; ++k) {
    const OrbitPoint x = random_orbit_point(2, rng);
    const Mat X = random_sl(2, rng);
    const Mat g = grad_height(X, x), h = ham_height(X, x);
    CHECK((h + kI * g).norm() < 1e-12);
    const Mat v = random_tangent(x, rng);
    CHECK(std::abs(b_tau(X, v) - b_tau(v, g)) < 1e-10 * b_norm(X));
    CHECK(std::abs(b_tau(X, v) - omega(v, h)) < 1e-10 * b_norm(X));
  }
  // an element of the Cartan algebra has zero gradient at a critical point
  CHECK(b_norm(grad_height(minimal_h0(2).matrix(), critical_point(2, 1))) < 1e-12);
}

TEST_CASE("compact form misses the orbit") {
  Rng rng = make_rng(5, 2);
  for (int k = 0; k < 100; ++k) {
    const Mat a = (0.5 + k) * random_antihermitian_sl(2, rng);
    bool on = true;
    try {
      (void)OrbitPoint::from_matrix(a);
    } catch (const Error&) {
      on = false;
    }
    CHECK_FALSE(on);
  }
}

TEST_CASE("flag sampling") {
  CHECK((flag_point(Mat::Zero(3, 3)).matrix() - minimal_h0(2).matrix()).norm() < 1e-14);
  Rng rng = make_rng(5, 3);
  const CartanVector h = CartanVector::real({1, 0, -1});
  for (const auto& p : flag_sample(2, 50, 1.5, rng)) {
    CHECK((p.matrix() - p.matrix().adjoint()).norm() < 1e-12);
    CHECK(p.residual() < 1e-10);
    CHECK(std::abs(potential(h, p).imag()) < 1e-12);
  }
}

TEST_CASE("vanishing sphere at n=1") {
  Rng rng = make_rng(5, 4);
  const CartanVector h = minimal_h0(1);
  const auto pts = vanishing_sphere(h, 7.5, 64, rng);
  REQUIRE(pts.size() == 64);
  for (const auto& s : pts) {
    CHECK(std::abs(potential(h, s.point).real() - 7.5) < 1e-8);
    CHECK(std::abs(potential(h, s.point).imag()) < 1e-12);
    const OrbitPoint mirror = flag_point(Mat(-s.t * s.generator));
    CHECK(std::abs(potential(h, mirror).real() - 7.5) < 1e-8);
  }
  CHECK_THROWS_AS(vanishing_sphere(h, 9.0, 4, rng), LevelRangeError);
  CHECK_THROWS_AS(vanishing_sphere(h, -9.0, 4, rng), LevelRangeError);
}

TEST_CASE("vanishing sphere dimension at n=2") {
  Rng rng = make_rng(5, 5);
  const CartanVector h = CartanVector::real({1, 0, -1});
  const auto pts = vanishing_sphere(h, 17.9, 200, rng);
  // secants from a sample span the tangent of a (2n-1)-sphere
  std::vector<Mat> sec;
  for (size_t k = 1; k < pts.size(); ++k) sec.push_back(pts[k].point.matrix() - pts[0].point.matrix());
  CHECK(real_span(sec, 1e-6).cols() >= 3);
  for (const auto& s : pts) CHECK(std::abs(potential(h, s.point).real() - 17.9) < 1e-8);
}
