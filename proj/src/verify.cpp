#include "lgm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <unsupported/Eigen/MatrixFunctions>

#include "lgm/cycles.hpp"
#include "lgm/flow.hpp"
#include "lgm/oracles.hpp"
#include "lgm/random.hpp"
#include "lgm/realspace.hpp"
#include "lgm/tangent.hpp"

namespace lgm {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Warn: return "warn";
  }
  return "?";
}

bool VerificationReport::passed() const { return count(Status::Fail) == 0; }

int VerificationReport::count(Status s) const {
  int c = 0;
  for (const auto& su : suites)
    for (const auto& ch : su.checks) c += ch.status == s;
  return c;
}

Json VerificationReport::to_json() const {
  Json j;
  j["config"] = config;
  Json su = Json::array();
  for (const auto& s : suites) {
    Json checks = Json::array();
    for (const auto& c : s.checks) {
      Json e;
      e["name"] = c.name;
      e["status"] = lgm::to_string(c.status);
      e["value"] = c.value;
      e["tolerance"] = c.tolerance;
      e["comparison"] = c.comparison;
      e["statement"] = c.statement;
      e["detail"] = c.detail;
      checks.push_back(e);
    }
    Json e;
    e["name"] = s.name;
    e["checks"] = checks;
    su.push_back(e);
  }
  j["suites"] = su;
  j["diagnostics"] = diagnostics;
  Json sum;
  sum["pass"] = count(Status::Pass);
  sum["fail"] = count(Status::Fail);
  sum["warn"] = count(Status::Warn);
  j["summary"] = sum;
  return j;
}

namespace {

Check make(std::string name, double value, double tolerance, std::string statement, Json detail = Json::object(),
           std::string cmp = "<=") {
  Check c;
  c.name = std::move(name);
  c.value = value;
  c.tolerance = tolerance;
  c.comparison = cmp;
  c.statement = std::move(statement);
  c.detail = std::move(detail);
  const bool ok = cmp == "<=" ? value <= tolerance : value > tolerance;
  c.status = ok ? Status::Pass : Status::Fail;
  return c;
}

double rel(double err, double scale) { return err / std::max(scale, 1e-300); }

Mat crit_matrix(int n, int j) { return critical_point(n, j).matrix(); }

}  // namespace

VerifyContext::VerifyContext(const RunConfig& c) : cfg(c), h(c.cartan()) {
  cfg.validate();
  const int n = cfg.n;
  for (int j = 0; j <= n; ++j)
    if (n % 2 == 0 || j == 0 || j == n) slots.push_back(j);
  ThimbleOptions opt;
  opt.c_offset = cfg.c_offset;
  opt.directions = cfg.directions;
  opt.seed = cfg.seed;
  opt.integrity_tol = cfg.tolerance("integrity");
  if (cfg.step_size > 0) opt.step = cfg.step_size;
  for (int j : slots)
    for (Sign s : {Sign::Minus, Sign::Plus}) thimbles.push_back(trace_thimble(j, s, h, opt));
}

// ---------------------------------------------------------------- lie-core

Suite verify_lie(const VerifyContext& ctx) {
  const int n = ctx.cfg.n;
  const double tol_alg = ctx.cfg.tolerance("algebraic");
  Rng rng = make_rng(ctx.cfg.seed, 1);
  Suite s{"lie-core", {}};

  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Mat x = random_sl(n, rng), y = random_sl(n, rng);
    const Cx a = killing_form(x, y), b = oracle::adjoint_trace_killing(x, y);
    worst = std::max(worst, rel(std::abs(a - b), killing_scale(n) * x.norm() * y.norm()));
  }
  s.checks.push_back(make("killing_adjoint_trace", worst, tol_alg,
                          "c tr(XY) equals tr(ad X ad Y) on 100 random pairs"));

  double iso = 0.0, adj = 0.0, sym = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Mat x = random_sl(n, rng), y = random_sl(n, rng), z = random_sl(n, rng);
    const double sc = b_norm(x) * b_norm(y);
    iso = std::max(iso, rel(std::abs(b_tau(tau(x), tau(y)) - b_tau(x, y)), sc));
    adj = std::max(adj, rel(std::abs(b_tau(bracket(x, y), z) + b_tau(y, bracket(tau(x), z))),
                            b_norm(x) * b_norm(y) * b_norm(z)));
    const Mat cu = random_antihermitian_sl(n, rng), hu = random_hermitian_sl(n, rng);
    const double s3 = b_norm(y) * b_norm(z);
    sym = std::max(sym, rel(std::abs(b_tau(bracket(cu, y), z) + b_tau(y, bracket(cu, z))), b_norm(cu) * s3));
    sym = std::max(sym, rel(std::abs(b_tau(bracket(hu, y), z) - b_tau(y, bracket(hu, z))), b_norm(hu) * s3));
  }
  s.checks.push_back(make("tau_isometry", iso, ctx.cfg.tolerance("isometry"), "tau preserves b_tau"));
  s.checks.push_back(make("ad_adjoint_relation", adj, tol_alg, "b_tau(ad(X)Y, Z) = -b_tau(Y, ad(tau X)Z)"));
  s.checks.push_back(make("ad_symmetry", sym, tol_alg,
                          "ad of the compact form is antisymmetric, ad of its i-multiple symmetric"));

  double re = 0.0;
  for (int k = 0; k < 10; ++k) {
    const Mat x = random_sl(1, rng), y = random_sl(1, rng);
    re = std::max(re, rel(std::abs(2.0 * killing_form(x, y).real() - oracle::realified_killing(x, y)),
                          killing_scale(1) * x.norm() * y.norm()));
  }
  s.checks.push_back(make("realification_identity", re, tol_alg,
                          "2 Re of the Killing form equals the trace form of realified sl(2)", {{"n", 1}}));

  const RootSystem rs(n);
  const CartanVector hr = ctx.h;
  double rr = 0.0;
  for (const Root a : rs.positive_roots()) {
    const Mat A = rs.a_vector(a), S = rs.s_vector(a), Z = rs.z_vector(a);
    const Cx al = root_eval(a, hr);
    rr = std::max(rr, (bracket(hr.matrix(), A) - al * S).norm());
    rr = std::max(rr, (bracket(hr.matrix(), Z) - kI * al * A).norm());
    rr = std::max(rr, std::abs(killing_form(A, Z)));
    rr = std::max(rr, std::abs(b_tau(A, A) - 2.0));
    rr = std::max(rr, std::abs(killing_form(A, A) + 2.0));
    rr = std::max(rr, std::abs(killing_form(rs.root_vector(a), rs.root_vector(a.negative())) - 1.0));
  }
  s.checks.push_back(make("root_relations", rr, tol_alg,
                          "[H,A]=a(H)S, [H,iS]=i a(H)A, <A,iS>=0, |A|^2=2 and Weyl normalization"));
  return s;
}

// ---------------------------------------------------------------- orbit

Suite verify_orbit(const VerifyContext& ctx) {
  const int n = ctx.cfg.n;
  Rng rng = make_rng(ctx.cfg.seed, 2);
  Suite s{"orbit", {}};

  double rt = 0.0, cov = 0.0;
  const std::vector<OrbitPoint> bases = {critical_point(n, 0), random_orbit_point(n, rng)};
  for (int k = 0; k < 100; ++k) {
    Mat g;
    if (k % 2 == 0) {
      g = random_su(n, rng);
    } else {
      Mat a = random_sl(n, rng);
      g = (0.3 / a.norm() * a).exp();
    }
    const OrbitPoint& x = bases[k % 4 < 2 ? 0 : 1];
    const Mat y = g * x.matrix() * g.inverse();
    const EigenSplit sp = split_eigen(y, ctx.cfg.tolerance("membership"));
    const OrbitPoint back = phi_pair(sp.line, sp.hyperplane);
    rt = std::max(rt, (back.matrix() - y).norm() / y.norm());
    const CVec gu = (g * x.eigenline()).normalized();
    const CVec l = sp.line.vector();
    cov = std::max(cov, (gu - l.dot(gu) * l).norm());
  }
  s.checks.push_back(make("ad_invariance_round_trip", std::max(rt, cov), ctx.cfg.tolerance("retraction"),
                          "conjugation preserves the orbit; split and reassembly round-trip",
                          {{"round_trip", rt}, {"line_covariance", cov}}));

  double im = 0.0;
  for (const auto& p : flag_sample(n, 100, 2.0, rng)) im = std::max(im, std::abs(potential(ctx.h, p).imag()));
  s.checks.push_back(make("flag_reality", im, ctx.cfg.tolerance("reality_flag"),
                          "f_H is real on Hermitian orbit points"));

  std::vector<double> vals;
  for (const auto& c : critical_points(minimal_h0(n))) vals.push_back(potential(ctx.h, c).real());
  double gap = 1e300;
  for (size_t a = 0; a < vals.size(); ++a)
    for (size_t b = a + 1; b < vals.size(); ++b) gap = std::min(gap, std::abs(vals[a] - vals[b]));
  s.checks.push_back(make("distinct_critical_values", gap, ctx.cfg.tolerance("algebraic"),
                          "critical values are pairwise distinct", {{"values", vals}}, ">"));

  double td = 0.0;
  int bad_dim = 0;
  for (int j = 0; j <= n; ++j) {
    const OrbitPoint x = critical_point(n, j);
    const TangentSpace ts(x);
    if (ts.complex_dim() != 2 * n || AdInverse(x.matrix()).rank() != 2 * n) ++bad_dim;
    std::vector<Mat> roots;
    const RootSystem rs(n);
    for (int k = 0; k <= n; ++k) {
      if (k == j) continue;
      for (const Root a : {Root{k, j}, Root{j, k}}) {
        roots.push_back(rs.root_vector(a));
        roots.push_back(kI * rs.root_vector(a));
      }
    }
    const RVec sines = principal_sines(real_span(roots), ts.real_basis_matrix());
    td = std::max(td, sines.size() ? sines.maxCoeff() : 0.0);
  }
  s.checks.push_back(make("tangent_dimension", bad_dim == 0 ? td : 1.0, ctx.cfg.tolerance("algebraic"),
                          "tangent space at each critical point has complex dimension 2n, spanned by the roots through slot j",
                          {{"dimension_mismatches", bad_dim}, {"max_sine", td}}));
  return s;
}

// ---------------------------------------------------------------- flow

Suite verify_flow(const VerifyContext& ctx) {
  const int n = ctx.cfg.n;
  const CartanVector& h = ctx.h;
  Rng rng = make_rng(ctx.cfg.seed, 3);
  Suite s{"flow", {}};

  double gi = 0.0;
  for (int k = 0; k < 100; ++k) {
    const OrbitPoint x = random_orbit_point(n, rng);
    const Mat v = random_tangent(x, rng);
    gi = std::max(gi, std::abs(dh(h, v) + metric_m(x, v, z_field(x, h))));
  }
  s.checks.push_back(make("gradient_identity", gi, ctx.cfg.tolerance("algebraic"),
                          "dh_H(v) + m_x(v, Z(x)) = 0 on 100 random orbit points"));

  double iso = 0.0;
  for (const auto& c : critical_points(n)) {
    const auto sp = linearize(c, h);
    for (const auto& basis : {sp.stable_basis(), sp.unstable_basis()})
      for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = a + 1; b < basis.size(); ++b) iso = std::max(iso, std::abs(omega(basis[a], basis[b])));
  }
  s.checks.push_back(make("stable_unstable_isotropy", iso, ctx.cfg.tolerance("algebraic"),
                          "Omega vanishes within the stable and within the unstable subspace"));

  double jac = 0.0;
  for (const auto& c : critical_points(n)) {
    const auto sp = linearize(c, h);
    std::vector<double> expect(2 * n, 0.0);
    for (const auto& m : sp.modes) {
      const double r = m.degenerate ? 0.0 : std::abs(m.rate);
      expect.insert(expect.end(), {-r, -r, r, r});
    }
    std::sort(expect.begin(), expect.end());
    auto fd = oracle::fd_jacobian_eigenvalues(c.matrix(), h);
    std::sort(fd.begin(), fd.end(), [](Cx a, Cx b) { return a.real() < b.real(); });
    if (fd.size() != expect.size()) {
      jac = 1e300;
      continue;
    }
    for (size_t k = 0; k < fd.size(); ++k) jac = std::max(jac, std::abs(fd[k] - expect[k]));
  }
  s.checks.push_back(make("fd_jacobian_spectrum", jac, ctx.cfg.tolerance("jacobian"),
                          "central-difference Jacobian of Z matches +-a(x)a(H) at every critical point"));

  int back_fail = 0, away_fail = 0;
  double worst_ratio = 0.0;
  const double step = ctx.cfg.step_size > 0 ? ctx.cfg.step_size : default_step(h);
  for (int j = 0; j <= n; ++j) {
    const OrbitPoint c = critical_point(n, j);
    const auto sp = linearize(c, h);
    double rmin = 1e300;
    for (const auto& m : sp.modes)
      if (!m.degenerate) rmin = std::min(rmin, std::abs(m.rate));
    for (int side = 0; side < 2; ++side) {
      const auto basis = side == 0 ? sp.stable_basis() : sp.unstable_basis();
      for (int k = 0; k < 10; ++k) {
        Mat d = Mat::Zero(n + 1, n + 1);
        std::normal_distribution<double> nd;
        for (const auto& b : basis) d += nd(rng) * b;
        d *= 1e-4 / b_norm(d);
        const OrbitPoint x0 = retract(Mat(c.matrix() + d));
        const double d0 = b_norm(x0.matrix() - c.matrix());
        FlowOptions o;
        o.step = step;
        o.conv_tol = 0.0;
        o.max_steps = side == 0 ? static_cast<int>(std::ceil(3.0 * std::log(10.0) / rmin / step)) : 10;
        const Trajectory tr = integrate(x0, h, o);
        std::vector<double> dist;
        for (const auto& p : tr.points) dist.push_back(b_norm(p.matrix() - c.matrix()));
        if (side == 0) {
          bool dec = true;
          for (int i = 1; i <= 10 && i < static_cast<int>(dist.size()); ++i) dec = dec && dist[i] < dist[i - 1];
          const double closest = *std::min_element(dist.begin(), dist.end());
          worst_ratio = std::max(worst_ratio, closest / d0);
          if (!dec || closest > 0.1 * d0) ++back_fail;
        } else {
          bool inc = true;
          for (size_t i = 1; i < dist.size(); ++i) inc = inc && dist[i] > dist[i - 1];
          if (!inc) ++away_fail;
        }
      }
    }
  }
  s.checks.push_back(make("index_respecting_flow", back_fail + away_fail, 0.0,
                          "forward flow returns along stable perturbations and leaves along unstable ones",
                          {{"stable_failures", back_fail}, {"unstable_failures", away_fail},
                           {"worst_closest_ratio", worst_ratio}, {"seeds_per_side", 10}}));

  FlowOptions o;
  o.step = 1e-3;
  o.max_steps = 10000;
  o.conv_tol = 0.0;
  // seed on the flag line through [e_1], [e_2]; the run ends near the saddle [e_2]
  const Mat seed_gen = 1e-7 * RootSystem(n).a_vector({0, 1});
  const Trajectory tr = integrate(flag_point(seed_gen), h, o);
  const double res = *std::max_element(tr.orbit_residuals.begin(), tr.orbit_residuals.end());
  s.checks.push_back(make("orbit_residual_long_run", res, ctx.cfg.tolerance("retraction"),
                          "orbit residual over 10000 steps of size 1e-3",
                          {{"steps", tr.points.size() - 1}, {"final_h", tr.h_values.back()}}));
  return s;
}

// ---------------------------------------------------------------- cycles

static std::vector<WeylElement> weyl_elements(int size, size_t cap) {
  std::vector<int> p(size);
  std::iota(p.begin(), p.end(), 0);
  std::vector<WeylElement> out;
  do {
    out.emplace_back(p);
  } while (out.size() < cap && std::next_permutation(p.begin(), p.end()));
  return out;
}

Suite verify_cycles(const VerifyContext& ctx) {
  const int n = ctx.cfg.n;
  Rng rng = make_rng(ctx.cfg.seed, 4);
  Suite s{"cycles", {}};

  int dim_bad = 0;
  double im_h = 0.0, herm_min = 1e300, kill_viol = 0.0;
  const auto ws = weyl_elements(n + 1, n <= 4 ? 1000000 : 200);
  for (const auto& w : ws) {
    const VwSubspace v = build_vw(w);
    if (v.dim() != n + n * (n + 1) || real_span(v.basis).cols() != v.dim()) ++dim_bad;
    RMat gh(v.dim(), v.dim());
    for (int a = 0; a < v.dim(); ++a)
      for (int b = 0; b < v.dim(); ++b) {
        const Cx hv = hermitian_form(v.basis[a], v.basis[b]);
        const Cx kv = killing_form(v.basis[a], v.basis[b]);
        im_h = std::max(im_h, std::abs(hv.imag()));
        gh(a, b) = hv.real();
        im_h = std::max(im_h, std::abs(kv.imag()));
        if (a < v.dim() && b < v.dim()) {
          const bool cart = v.kinds[a] == BlockKind::Cartan && v.kinds[b] == BlockKind::Cartan;
          if (a != b && !cart) kill_viol = std::max(kill_viol, std::abs(kv));
          if (a == b) {
            const double sgn = v.kinds[a] == BlockKind::Compact ? -1.0 : 1.0;
            if (!(sgn * kv.real() > 0)) kill_viol = std::max(kill_viol, 1.0);
          }
        }
      }
    herm_min = std::min(herm_min, Eigen::SelfAdjointEigenSolver<RMat>(gh).eigenvalues().minCoeff());
  }
  const double vw_val = std::max({im_h, kill_viol, dim_bad ? 1.0 : 0.0, herm_min > 0 ? 0.0 : 1.0});
  s.checks.push_back(make("vw_dimension_and_gram", vw_val, 1e-12,
                          "V_w has dimension n + n(n+1); H_tau and the Killing form are real on it, H_tau positive "
                          "definite, Killing positive on the Cartan and noncompact blocks and negative on the compact ones",
                          {{"weyl_elements", ws.size()}, {"dimension_failures", dim_bad}, {"max_imag", im_h},
                           {"min_htau_eigenvalue", herm_min}, {"killing_violation", kill_viol}}));

  int accepted = 0;
  for (int k = 0; k < 100; ++k) {
    std::uniform_real_distribution<double> ud(0.1, 10.0);
    const Mat a = ud(rng) * random_antihermitian_sl(n, rng);
    try {
      (void)OrbitPoint::from_matrix(a, ctx.cfg.tolerance("membership"));
      ++accepted;
    } catch (const MembershipError&) {
    } catch (const StepSizeError&) {
    }
  }
  s.checks.push_back(make("compact_form_disjoint", accepted, 0.0,
                          "no anti-Hermitian traceless matrix lies on the orbit (100 samples)"));

  double var = 0.0;
  for (int k = 0; k < 50; ++k) {
    const OrbitPoint x = random_orbit_point(n, rng);
    const Mat X = random_sl(n, rng);
    const Mat g = grad_height(X, x), hm = ham_height(X, x);
    const Mat v = random_tangent(x, rng);
    const double df = b_tau(X, v);
    const double sc = b_norm(X);
    var = std::max(var, rel(std::abs(df - b_tau(v, g)), sc));
    var = std::max(var, rel(std::abs(df - omega(v, hm)), sc));
  }
  s.checks.push_back(make("ham_grad_identity", var, ctx.cfg.tolerance("algebraic"),
                          "df_X(v) = b_tau(v, grad f_X) = Omega(v, ham f_X) for 50 random tangent v"));
  return s;
}

// ---------------------------------------------------------------- graphs

Suite verify_graphs(const VerifyContext& ctx) {
  const int n = ctx.cfg.n;
  const CartanVector& h = ctx.h;
  Rng rng = make_rng(ctx.cfg.seed, 5);
  Suite s{"graphs", {}};

  double det = 0.0;
  for (int nn : {2, 4, 6})
    for (int j = 0; j <= nn; ++j)
      for (Sign sg : {Sign::Plus, Sign::Minus}) {
        const GraphSpec g = m_j_pm(nn, j, sg);
        det = std::max(det, std::abs(g.det() - 1.0));
        if (!g.is_involution()) det = std::max(det, 1.0);
      }
  s.checks.push_back(make("det_m_j", det, ctx.cfg.tolerance("algebraic"),
                          "m_j^+- are involutions of determinant 1 for n in {2,4,6}"));

  double im = 0.0;
  int mism = 0;
  Json dets = Json::array();
  for (int j : ctx.slots)
    for (Sign sg : {Sign::Plus, Sign::Minus}) {
      const GraphSpec g = m_j_pm(n, j, sg);
      const HessianReport r = hessian_restricted(h, j, g);
      for (const auto& row : r.rows) im = std::max(im, std::abs(row.value.imag()));
      const Definiteness want = sg == Sign::Plus ? Definiteness::Positive : Definiteness::Negative;
      if (r.definiteness != want) ++mism;
      if (!g.in_torus()) dets.push_back(Json::array({j + 1, to_string(sg), g.det().real()}));
    }
  s.checks.push_back(make("hessian_definiteness_reality", mism ? 1.0 : im, 1e-12,
                          "restricted Hessian at [e_j] is real and definite with the sign of m_j^+-",
                          {{"definiteness_mismatches", mism}, {"max_imag", im}, {"determinant_minus_one", dets}}));

  double eq = 0.0, cross = 0.0, fd = 0.0;
  for (int j : ctx.slots)
    for (Sign sg : {Sign::Plus, Sign::Minus}) {
      const GraphSpec g = m_j_pm(n, j, sg);
      const HessianReport r = hessian_restricted(h, j, g);
      const GraphTangent gt = graph_tangent_basis(g, j);
      const Mat x = crit_matrix(n, j);
      for (size_t p = 0; p + 1 < gt.generators.size(); p += 2) {
        const Cx want = std::find_if(r.rows.begin(), r.rows.end(), [&](const HessianRow& row) {
                          return row.k == gt.k[p];
                        })->value;
        for (size_t q : {p, p + 1}) {
          eq = std::max(eq, std::abs(hessian_full(gt.generators[q], gt.generators[q], x, h) - want));
          fd = std::max(fd, std::abs(oracle::fd_second_derivative(gt.generators[q], x, h) - want));
        }
        cross = std::max(cross, std::abs(hessian_full(gt.generators[p], gt.generators[p + 1], x, h)));
      }
    }
  s.checks.push_back(make("hessian_oracle_equivalence", std::max(eq, cross), ctx.cfg.tolerance("hessian"),
                          "restricted Hessian values equal the full Hessian on the graph tangent basis; "
                          "mixed terms of one root vanish",
                          {{"max_difference", eq}, {"max_cross", cross}, {"finite_difference_gap", fd}}));

  double eps = 0.0;
  for (int j : ctx.slots)
    for (Sign sg : {Sign::Plus, Sign::Minus}) {
      const GraphSpec g = m_j_pm(n, j, sg);
      for (int k = 0; k <= n; ++k) {
        if (k == j) continue;
        double want = k < j ? 1.0 : -1.0;
        if (sg == Sign::Minus) want = -want;
        eps = std::max(eps, std::abs(g.root_factor(k, j) - want));
      }
    }
  s.checks.push_back(make("epsilon_pattern", eps, ctx.cfg.tolerance("algebraic"),
                          "exp(-i a_kj(H1)) is +1 for k<j and -1 for k>j under m_j^+, reversed under m_j^-"));

  double mem = 0.0;
  size_t count = 0;
  for (const auto& th : ctx.thimbles)
    for (const auto& sm : th.samples) {
      mem = std::max(mem, sm.graph_residual);
      ++count;
    }
  s.checks.push_back(make("thimble_membership", mem, ctx.cfg.tolerance("graph_membership"),
                          "every traced thimble sample lies on its graph", {{"samples", count}}));

  int disagree = 0;
  double on_max = 0.0, off_min = 1e300;
  const GraphSpec g = m_j_pm(n, ctx.slots.back(), Sign::Plus);
  for (int k = 0; k < 100; ++k) {
    OrbitPoint x = k % 2 == 0 ? graph_point(random_vector(n + 1, rng), g) : random_orbit_point(n, rng);
    const double a = graph_membership(x, g);
    const double b = hermitian_residual(untwist(x, g));
    const bool on_a = a < 1e-10, on_b = b < 1e-10;
    if (on_a != on_b) ++disagree;
    if (k % 2 == 0) on_max = std::max({on_max, a, b});
    else off_min = std::min({off_min, a, b});
  }
  s.checks.push_back(make("m2_image_equivalence", disagree, 0.0,
                          "graph membership under m equals zero-section membership of the untwisted point",
                          {{"on_graph_max", on_max}, {"off_graph_min", off_min}, {"samples", 100}}));
  return s;
}

// ---------------------------------------------------------------- thimble

Suite verify_thimble(const VerifyContext& ctx) {
  const CartanVector& h = ctx.h;
  Suite s{"thimble", {}};
  const int n = ctx.cfg.n;

  double mem = 0.0;
  int not_conv = 0, tried = 0;
  for (const auto& th : ctx.thimbles) {
    for (const auto& sm : th.samples) mem = std::max(mem, sm.graph_residual);
    const Mat c = crit_matrix(n, th.j);
    const double sg = th.sign == Sign::Minus ? 1.0 : -1.0;  // reverse of the tracing direction
    int picked = 0;
    for (const auto& sm : th.samples) {
      if (!sm.boundary || picked >= 4) continue;
      ++picked;
      ++tried;
      OrbitPoint x = sm.point;
      const auto [rlo, rhi] = f1_rates(th.graph, th.j, h);
      const double dt = 0.2 / rhi;
      const int steps = static_cast<int>(std::ceil((std::log(1e6) + 10.0) / rlo / dt));
      bool ok = false;
      for (int k = 0; k < steps; ++k) {
        x = f1_step(x, h, sg, dt);
        // transverse directions are unstable for the reverse flow; drop the per-step roundoff
        if (graph_membership(x, th.graph) > ctx.cfg.tolerance("graph_membership")) break;
        x = graph_point(x.eigenline(), th.graph);
        if (b_norm(x.matrix() - c) < 1e-6) {
          ok = true;
          break;
        }
      }
      if (!ok) ++not_conv;
    }
  }
  s.checks.push_back(make("morse_suite", not_conv ? 1.0 : mem, ctx.cfg.tolerance("graph_membership"),
                          "thimble samples stay in the graph; graph flows from the boundary return to [e_j]",
                          {{"max_graph_residual", mem}, {"reverse_flows", tried}, {"not_converged", not_conv},
                           {"thimbles", ctx.thimbles.size()}}));

  double f2 = 0.0;
  for (const auto& th : ctx.thimbles)
    for (const auto& sm : th.samples) f2 = std::max(f2, std::abs(sm.f2 - th.f2_critical));
  s.checks.push_back(make("f2_constancy", f2, ctx.cfg.tolerance("f2_drift"),
                          "Im f_H is constant on the traced thimbles"));

  int collisions = 0, nonmono = 0;
  const double ctol = ctx.cfg.tolerance("collision");
  for (const auto& th : ctx.thimbles) {
    // sweep along one coordinate to find near pairs from distinct flow lines
    std::vector<std::pair<double, size_t>> key;
    for (size_t i = 0; i < th.samples.size(); ++i)
      if (th.samples[i].seed >= 0) key.push_back({realify(th.samples[i].point.matrix())(0), i});
    std::sort(key.begin(), key.end());
    for (size_t a = 0; a < key.size(); ++a)
      for (size_t b = a + 1; b < key.size() && key[b].first - key[a].first <= ctol; ++b) {
        const auto& p = th.samples[key[a].second];
        const auto& q = th.samples[key[b].second];
        if (p.seed == q.seed) continue;  // radii on one direction may share a flow line
        if (b_norm(p.point.matrix() - q.point.matrix()) <= ctol) ++collisions;
      }
    for (size_t i = 1; i < th.samples.size(); ++i) {
      const auto& p = th.samples[i - 1];
      const auto& q = th.samples[i];
      if (p.seed != q.seed || p.radius != q.radius || p.seed < 0) continue;
      const bool ok = th.sign == Sign::Minus ? q.f1 < p.f1 : q.f1 > p.f1;
      if (!ok) ++nonmono;
    }
  }
  s.checks.push_back(make("ball_topology_proxy", collisions + nonmono, 0.0,
                          "samples of distinct flow lines never collide and f1 is strictly monotone along each line",
                          {{"collisions", collisions}, {"non_monotone_steps", nonmono}}));

  double semi = 0.0;
  for (const auto& th : ctx.thimbles) {
    const double sg = th.sign == Sign::Minus ? -1.0 : 1.0;
    size_t start = 1;
    for (int line = 0; line < 3 && start < th.samples.size(); ++line) {
      size_t end = start;
      while (end < th.samples.size() && !th.samples[end].boundary) ++end;
      if (end >= th.samples.size()) break;
      const size_t mid = start + (end - start) / 2;
      const FlowLine fl = f1_flow_to_level(th.samples[mid].point, h, sg, th.level, 0.005, 0.02, 200000);
      if (fl.reached) semi = std::max(semi, b_norm(fl.points.back().matrix() - th.samples[end].point.matrix()));
      else semi = 1e300;
      start = end + 1 + (end - start + 1) * 7;  // skip ahead a few lines
    }
  }
  s.checks.push_back(make("semigroup_consistency", semi, ctx.cfg.tolerance("flow"),
                          "restarting a flow line from an interior sample with a finer step reaches the same boundary point"));
  return s;
}

// ---------------------------------------------------------------- diagnostics

Json verify_diagnostics(const VerifyContext& ctx) {
  const int n = ctx.cfg.n;
  const CartanVector& h = ctx.h;
  Rng rng = make_rng(ctx.cfg.seed, 6);
  Json d;

  {
    // both readings of the sign lemma for x = z + y
    int negative = 0, real_ok = 0;
    double z_reading = 0.0, h0_reading = 0.0;
    const int trials = 50;
    const CartanVector h0 = minimal_h0(n);
    for (int k = 0; k < trials; ++k) {
      std::uniform_real_distribution<double> ud(0.1, 1.0);
      std::vector<double> zs(n + 1, 0.0);
      double acc = 0.0;
      for (int i = n; i >= 0; --i) {
        acc += ud(rng);
        zs[i] = acc;
      }
      const double mean = std::accumulate(zs.begin(), zs.end(), 0.0) / (n + 1);
      for (auto& v : zs) v -= mean;
      const CartanVector z = CartanVector::real(zs);
      const Mat y = 0.1 * random_antihermitian_sl(n, rng);
      const Cx v = lemma_pairing(z, y, h);
      if (v.real() < 0) ++negative;
      if (std::abs(v.imag()) <= 1e-12 * std::max(1.0, std::abs(v))) ++real_ok;
      double fz = 0.0, f0 = 0.0;
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
          if (i == j) continue;
          const double w = std::norm(y(i, j)) * (h[i] - h[j]).real();
          fz += w * (z[i] - z[j]).real();
          f0 += w * (h0[i] - h0[j]).real();
        }
      const double c = killing_scale(n);
      z_reading = std::max(z_reading, std::abs(v.real() + c * fz) / std::max(1.0, std::abs(v)));
      h0_reading = std::max(h0_reading, std::abs(v.real() + c * f0) / std::max(1.0, std::abs(v)));
    }
    d["sign_lemma"] = {{"trials", trials}, {"negative", negative}, {"real", real_ok},
                       {"closed_form_with_z_residual", z_reading}, {"closed_form_with_h0_residual", h0_reading}};
  }

  {
    // Im f along the m_x flow from flag-adjacent points
    double drift = 0.0;
    for (int k = 0; k < 5; ++k) {
      const OrbitPoint x0 = random_orbit_point(n, rng, 0.8);
      FlowOptions o;
      o.max_steps = 200;
      try {
        const Trajectory tr = integrate(x0, h, o);
        const auto [lo, hi] = std::minmax_element(tr.f2_values.begin(), tr.f2_values.end());
        drift = std::max(drift, *hi - *lo);
      } catch (const StepSizeError&) {
      }
    }
    d["im_f_along_z_flow"] = {{"max_variation", drift}, {"trajectories", 5}, {"steps", 200}};
  }

  {
    // generic perturbations of critical points
    int conv = 0, escaped = 0, open = 0;
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k < 10; ++k) {
        const OrbitPoint c = critical_point(n, j);
        Mat p = TangentSpace(c).project(random_matrix(n + 1, rng));
        const OrbitPoint x0 = retract(Mat(c.matrix() + 1e-3 / b_norm(p) * p));
        FlowOptions o;
        o.max_steps = 3000;
        try {
          const Trajectory tr = integrate(x0, h, o);
          if (tr.converged) ++conv;
          else if (tr.points.back().matrix().norm() > 1e3) ++escaped;
          else ++open;
        } catch (const StepSizeError&) {
          ++escaped;
        }
      }
    d["generic_perturbations"] = {{"converged", conv}, {"escaped", escaped}, {"undecided", open}};
  }

  {
    const Mat v = RootSystem(1).root_vector({0, 1});
    const CartanVector hh = CartanVector::real({1, -1});
    const CartanVector h1(CVec((CVec(2) << kI, -kI).finished()));
    const Mat w = kI * v;
    Mat base = h1.matrix();
    Rng r2 = make_rng(ctx.cfg.seed, 7);
    const Mat generic = random_sl(1, r2);
    d["nongradient"] = {{"documented_tuple", nongradient_witness(hh, h1, v, w)},
                        {"documented_tuple_closed_form", nongradient_closed_form(hh, h1, v, w)},
                        {"generic_base_point", nongradient_witness(hh, generic, random_sl(1, r2), random_sl(1, r2))},
                        {"cartan_base_point_random_pair", nongradient_witness(hh, base, random_sl(1, r2), random_sl(1, r2))}};
  }

  {
    double om = 0.0, span = 0.0;
    int dim_bad = 0, far_bad = 0;
    for (const auto& w : weyl_elements(n + 1, n <= 3 ? 1000000 : 24)) {
      const OrbitPoint x = OrbitPoint::from_matrix(weyl_action(w, minimal_h0(n)).matrix());
      const auto dw = delta_w(w, x);
      if (static_cast<int>(dw.size()) != 2 * n) ++dim_bad;
      for (size_t a = 0; a < dw.size(); ++a)
        for (size_t b = a + 1; b < dw.size(); ++b) om = std::max(om, std::abs(omega(dw[a], dw[b])));
      std::vector<Mat> hams;
      for (const Mat& X : delta_w_generators(w)) {
        const Mat hm = ham_height(X, x);
        if (b_norm(hm) > 1e-12) hams.push_back(hm);
      }
      const RMat qa = real_span(hams), qb = real_span(dw);
      if (qa.cols() != qb.cols()) ++dim_bad;
      else if (qa.cols()) span = std::max(span, principal_sines(qa, qb).maxCoeff());
      const OrbitPoint far = random_orbit_point(n, rng);
      if (static_cast<int>(delta_w(w, far).size()) > 2 * n) ++far_bad;
    }
    d["delta_w"] = {{"dimension_failures", dim_bad}, {"max_omega", om}, {"ham_span_sine", span},
                    {"far_point_excess", far_bad}};
  }

  {
    Json arr = Json::array();
    for (const auto& th : ctx.thimbles) {
      const LagrangianCheck lc = lagrangian_check(th.samples, ctx.cfg.step_size > 0 ? ctx.cfg.step_size : 0.02);
      arr.push_back({{"j", th.j + 1}, {"sign", to_string(th.sign)}, {"max_omega", lc.max_omega},
                     {"max_nn_distance", lc.max_nn_distance}, {"sparse", lc.sparse}, {"r_max", th.r_max},
                     {"samples", th.samples.size()}});
    }
    d["thimble_lagrangian"] = arr;
  }

  {
    // boundary samples against level-set points on their own chart rays
    Json arr = Json::array();
    for (const auto& th : ctx.thimbles) {
      double worst = 0.0;
      int checked = 0;
      for (const auto& sm : th.samples) {
        if (!sm.boundary || checked >= 16) continue;
        ++checked;
        CVec u = sm.point.eigenline() / sm.point.eigenline()(th.j);
        u(th.j) = 0.0;
        const double r = u.norm();
        const auto rp = oracle::level_point_on_ray(th.j, th.graph, h, CVec(u / r), th.level);
        worst = rp.found ? std::max(worst, b_norm(rp.point.matrix() - sm.point.matrix())) : 1e300;
      }
      arr.push_back({{"j", th.j + 1}, {"sign", to_string(th.sign)}, {"max_distance", worst}, {"checked", checked}});
    }
    d["boundary_sphere"] = arr;
  }

  {
    // Z flow versus the F1 flow from a graph seed near each critical point
    Json arr = Json::array();
    for (const auto& th : ctx.thimbles) {
      if (th.samples.size() < 3) continue;
      const OrbitPoint x0 = th.samples[1].point;
      FlowOptions o;
      o.max_steps = 200;
      o.direction = th.sign == Sign::Minus ? Direction::Forward : Direction::Backward;
      double mem = 0.0;
      try {
        const Trajectory tr = integrate(x0, h, o);
        for (const auto& p : tr.points) mem = std::max(mem, graph_membership(p, th.graph));
      } catch (const StepSizeError&) {
        mem = 1e300;
      }
      arr.push_back({{"j", th.j + 1}, {"sign", to_string(th.sign)}, {"z_flow_graph_residual", mem}});
    }
    d["z_flow_on_graphs"] = arr;
  }

  {
    // largest level offset at which tracing stays inside the graph
    Json arr = Json::array();
    for (int j : ctx.slots)
      for (Sign sg : {Sign::Minus, Sign::Plus}) {
        double best = 0.0;
        for (double off : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0}) {
          ThimbleOptions opt;
          opt.c_offset = off;
          opt.directions = 8;
          opt.radii = 2;
          opt.seed = ctx.cfg.seed;
          try {
            (void)trace_thimble(j, sg, h, opt);
            best = off;
          } catch (const Error&) {
            break;
          }
        }
        arr.push_back({{"j", j + 1}, {"sign", to_string(sg)}, {"largest_c_offset", best}});
      }
    d["containment_range"] = arr;
  }
  return d;
}

VerificationReport run_verify(const RunConfig& cfg) {
  const VerifyContext ctx(cfg);
  VerificationReport rep;
  Json c;
  c["n"] = cfg.n;
  c["H"] = to_json(ctx.h);
  c["seed"] = cfg.seed;
  c["c_offset"] = cfg.c_offset;
  c["directions"] = cfg.directions;
  c["step_size"] = cfg.step_size;
  Json t = Json::object();
  for (const auto& [k, v] : cfg.tol) t[k] = v;
  c["tolerances"] = t;
  rep.config = c;
  using SuiteFn = Suite (*)(const VerifyContext&);
  const std::vector<std::pair<std::string, SuiteFn>> fns = {
      {"cycles", verify_cycles}, {"flow", verify_flow},   {"graphs", verify_graphs},
      {"lie-core", verify_lie},  {"orbit", verify_orbit}, {"thimble", verify_thimble}};
  for (const auto& [name, fn] : fns) {
    try {
      rep.suites.push_back(fn(ctx));
    } catch (const std::exception& e) {
      Suite s{name, {}};
      Check c = make("suite_aborted", 1.0, 0.0, "suite raised an exception", {{"what", e.what()}});
      s.checks.push_back(c);
      rep.suites.push_back(s);
    }
  }
  std::sort(rep.suites.begin(), rep.suites.end(), [](const Suite& a, const Suite& b) { return a.name < b.name; });
  rep.diagnostics = verify_diagnostics(ctx);
  return rep;
}

}  // namespace lgm
