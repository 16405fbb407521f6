#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lgm/lie.hpp"
#include "lgm/oracles.hpp"
#include "lgm/random.hpp"

using namespace lgm;

namespace {
Mat diag(std::initializer_list<Cx> d) {
  CVec v(static_cast<int>(d.size()));
  int k = 0;
  for (Cx x : d) v(k++) = x;
  return v.asDiagonal();
}
}  // namespace

TEST_CASE("killing form examples") {
  const Mat h = diag({1, -1});
  CHECK(std::abs(killing_form(h, h) - 8.0) < 1e-12);
  CHECK(std::abs(oracle::adjoint_trace_killing(h, h) - 8.0) < 1e-12);

  for (int n = 1; n <= 4; ++n) {
    const RootSystem rs(n);
    for (Root a : rs.roots()) {
      const Mat x = rs.root_vector(a), y = rs.root_vector(a.negative());
      CHECK(std::abs(killing_form(x, y) - 1.0) < 1e-12);
      CHECK(std::abs(oracle::adjoint_trace_killing(x, y) - 1.0) < 1e-12);
      CHECK(std::abs(killing_form(x, x)) < 1e-15);
    }
  }
}

TEST_CASE("killing form matches adjoint trace on random pairs") {
  Rng rng = make_rng(7, 0);
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k < 100; ++k) {
      const Mat x = random_sl(n, rng), y = random_sl(n, rng);
      const Cx a = killing_form(x, y), b = oracle::adjoint_trace_killing(x, y);
      CHECK(std::abs(a - b) <= 1e-10 * killing_scale(n) * x.norm() * y.norm());
      CHECK(std::abs(a - killing_form(y, x)) < 1e-12 * (1 + std::abs(a)));
    }
}

TEST_CASE("killing form rejects mismatched shapes") {
  CHECK_THROWS_AS(killing_form(Mat::Zero(2, 2), Mat::Zero(3, 3)), ShapeError);
}

TEST_CASE("scales") {
  CHECK(killing_scale(2) == doctest::Approx(6.0));
  CHECK(weyl_scale(2) == doctest::Approx(1.0 / std::sqrt(6.0)));
  const RootSystem rs(3);
  CHECK(rs.roots().size() == 12);
  CHECK(rs.positive_roots().size() == 6);
  for (Root a : rs.positive_roots()) CHECK(a.i < a.j);
}

TEST_CASE("tau examples") {
  const Mat u = kI * diag({1, -1});
  CHECK((tau(u) - u).norm() < 1e-15);
  const Mat h = diag({1, -1});
  CHECK((tau(h) + h).norm() < 1e-15);
  const RootSystem rs(2);
  for (Root a : rs.roots()) CHECK((tau(rs.root_vector(a)) + rs.root_vector(a.negative())).norm() < 1e-15);
  Rng rng = make_rng(7, 1);
  const Mat x = random_sl(2, rng);
  CHECK((tau(tau(x)) - x).norm() < 1e-15);
}

TEST_CASE("hermitian form examples") {
  const RootSystem rs(2);
  const Mat x = rs.root_vector({0, 1});
  CHECK(std::abs(hermitian_form(x, x) - 1.0) < 1e-12);
  Rng rng = make_rng(7, 2);
  for (int k = 0; k < 20; ++k) {
    const Mat a = random_antihermitian_sl(2, rng), b = random_antihermitian_sl(2, rng);
    CHECK(std::abs(omega(a, b)) < 1e-12);
    const Mat z = random_sl(2, rng), w = random_sl(2, rng);
    CHECK(std::abs(omega(z, w) - b_tau(z, Mat(kI * w))) < 1e-12);
    CHECK(std::abs(hermitian_form(z, w) - std::conj(hermitian_form(w, z))) < 1e-12);
    CHECK(b_tau(z, z) > 0);
    CHECK(std::abs(omega(Mat(kI * z), z)) > 1e-3);
    CHECK(std::abs(hermitian_form(z, w) - killing_form(z, tau(w)) * -1.0) < 1e-10 * (1 + z.norm() * w.norm()));
  }
}

TEST_CASE("root evaluation") {
  const CartanVector h = CartanVector::real({1, 0, -1});
  CHECK(std::abs(root_eval({0, 1}, h) - 1.0) < 1e-15);
  CHECK(std::abs(root_eval({2, 0}, minimal_h0(2)) + 3.0) < 1e-15);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(std::abs(root_eval({i, j}, h) + root_eval({j, i}, h)) < 1e-15);
}

TEST_CASE("cartan vector validation and regularity") {
  CHECK_THROWS_AS(CartanVector::real({1, 1}), ShapeError);
  const CartanVector h0 = minimal_h0(2);
  REQUIRE(h0.degenerate_root().has_value());
  CHECK(*h0.degenerate_root() == Root{1, 2});
  CHECK(CartanVector::real({1, 0, -1}).is_dominant_regular());
  CHECK_FALSE(CartanVector::real({0, 1, -1}).is_dominant_regular());
}

TEST_CASE("pi_w examples") {
  CHECK(pi_w(WeylElement::identity(3)).empty());
  CHECK(pi_w(WeylElement::longest(3)).size() == 3);
  const auto t = pi_w(WeylElement::transposition(3, 0, 1));
  REQUIRE(t.size() == 1);
  CHECK(t[0] == Root{0, 1});
  // |Pi_w| equals the length for every element of S_4
  std::vector<int> p = {0, 1, 2, 3};
  do {
    const WeylElement w(p);
    CHECK(static_cast<int>(pi_w(w).size()) == w.length());
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("weyl action examples") {
  const CartanVector h = CartanVector::real({3, 1, -4});
  CHECK((weyl_action(WeylElement::identity(3), h).diag() - h.diag()).norm() < 1e-15);
  const CartanVector t = weyl_action(WeylElement::transposition(3, 0, 1), minimal_h0(2));
  CHECK((t.diag() - CartanVector::real({-1, 2, -1}).diag()).norm() < 1e-15);
  std::vector<int> p = {0, 1, 2};
  std::vector<std::vector<double>> seen;
  do {
    const CartanVector v = weyl_action(WeylElement(p), minimal_h0(2));
    std::vector<double> r = {v[0].real(), v[1].real(), v[2].real()};
    if (std::find(seen.begin(), seen.end(), r) == seen.end()) seen.push_back(r);
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(seen.size() == 3);
}

TEST_CASE("weyl element algebra") {
  const WeylElement w({2, 0, 1});
  CHECK(w * w.inverse() == WeylElement::identity(3));
  CHECK(WeylElement::longest(4).length() == 6);
  const WeylElement m = WeylElement::moving_first_to(4, 2);
  CHECK(m(0) == 2);
  CHECK(m.length() == 2);
}

TEST_CASE("root relations") {
  for (int n = 1; n <= 3; ++n) {
    const RootSystem rs(n);
    std::vector<double> hv(n + 1);
    for (int k = 0; k <= n; ++k) hv[k] = n - 2.0 * k;
    const CartanVector h = CartanVector::real(hv);
    for (Root a : rs.positive_roots()) {
      const Cx al = root_eval(a, h);
      CHECK((bracket(h.matrix(), rs.a_vector(a)) - al * rs.s_vector(a)).norm() < 1e-12);
      CHECK((bracket(h.matrix(), rs.z_vector(a)) - kI * al * rs.a_vector(a)).norm() < 1e-12);
      CHECK(std::abs(killing_form(rs.a_vector(a), rs.z_vector(a))) < 1e-12);
      CHECK(std::abs(b_tau(rs.a_vector(a), rs.a_vector(a)) - 2.0) < 1e-12);
      CHECK(std::abs(killing_form(rs.a_vector(a), rs.a_vector(a)) + 2.0) < 1e-12);
    }
  }
}

TEST_CASE("traceless") {
  CHECK(is_traceless(diag({1, -1})));
  CHECK_FALSE(is_traceless(diag({1, 1})));
}
