#include "lgm/thimble.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "lgm/realspace.hpp"
#include "lgm/tangent.hpp"

namespace lgm {

std::pair<double, double> f1_rates(const GraphSpec& g, int j, const CartanVector& h) {
  const GraphTangent gt = graph_tangent_basis(g, j);
  const Mat x = critical_point(h.rank(), j).matrix();
  double lo = 1e300, hi = 0.0;
  for (size_t i = 0; i < gt.generators.size(); ++i) {
    const double v = std::abs(hessian_full(gt.generators[i], gt.generators[i], x, h)) / b_tau(gt.vectors[i], gt.vectors[i]);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

KaehlerGradients kaehler_gradients(const OrbitPoint& x, const CartanVector& h) {
  const TangentSpace ts(x);
  KaehlerGradients out;
  out.f1 = ts.project(h.matrix());
  // realified projection of the Riesz vector of Im f = b_tau(., iH)
  const RMat q = ts.real_basis_matrix();
  out.f2 = complexify(q * (q.transpose() * realify(Mat(kI * h.matrix()))), x.dim());
  return out;
}

FgDecomposition fg_decomposition_check(const OrbitPoint& x, const GraphSpec& g, const CartanVector& h,
                                       double membership_tol) {
  if (graph_membership(x, g) > membership_tol) throw MembershipError("point is not on the graph");
  const RMat q = graph_tangent_space(x, g);
  const KaehlerGradients k = kaehler_gradients(x, h);
  FgDecomposition out;
  out.g1 = complexify(q * (q.transpose() * realify(h.matrix())), x.dim());
  out.g2 = complexify(q * (q.transpose() * realify(Mat(kI * h.matrix()))), x.dim());
  out.residual = b_norm(k.f1 - (out.g1 - kI * out.g2));
  const double nf = b_norm(k.f1);
  if (nf > 0) {
    out.relative = out.residual / nf;
    out.g2_relative = b_norm(out.g2) / nf;
    out.f1_normal_relative = b_norm(k.f1 - out.g1) / nf;
  }
  return out;
}

namespace {

CVec unit(int dim, int k) {
  CVec e = CVec::Zero(dim);
  e(k) = 1.0;
  return e;
}

bool inside(double f, double level, double crit) {
  return level < crit ? (f > level && f < crit) : (f < level && f > crit);
}

double top_rate(const GraphSpec& g, int j, const CartanVector& h) { return f1_rates(g, j, h).second; }

}  // namespace

ThimbleSeeds thimble_seeds(int j, const GraphSpec& g, const CartanVector& h, double level, const ThimbleOptions& opt) {
  const int n = h.rank(), dim = n + 1;
  const double crit = potential(h, critical_point(n, j)).real();
  const RMat qt = real_span(graph_tangent_basis(g, j).vectors);
  if (qt.cols() != 2 * n) throw MembershipError("graph tangent basis is degenerate");
  const CVec ej = unit(dim, j);
  const CVec d = g.diag().conjugate();
  RMat jac(2 * dim * dim, 2 * n);
  std::vector<CVec> dirs;
  for (int k = 0, c = 0; k < dim; ++k) {
    if (k == j) continue;
    for (const Cx ph : {Cx(1.0), kI}) {
      dirs.push_back(ph * unit(dim, k));
      jac.col(c++) = realify(chart_derivative(ej, d, dirs.back()));
    }
  }
  const Eigen::ColPivHouseholderQR<RMat> qr(jac);
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> nd;
  ThimbleSeeds out;
  for (int s = 0; s < opt.directions; ++s) {
    RVec c(2 * n);
    for (int i = 0; i < 2 * n; ++i) c(i) = nd(rng);
    c.normalize();
    const RVec coef = qr.solve(RVec(qt * c));
    CVec delta = CVec::Zero(dim);
    for (int i = 0; i < 2 * n; ++i) delta += coef(i) * dirs[i];
    out.deltas.push_back(delta);
  }
  auto ok = [&](double r) {
    for (const CVec& delta : out.deltas) {
      try {
        const OrbitPoint x = graph_point(CVec(ej + r * delta), g);
        if (graph_membership(x, g) >= 1e-7) return false;
        if (!inside(potential(h, x).real(), level, crit)) return false;
      } catch (const TransversalityError&) {
        return false;
      }
    }
    return true;
  };
  double r = 1.0;
  for (int it = 0; it < 80 && !ok(r); ++it) r *= 0.5;
  if (ok(r)) {
    double lo = r, hi = 2.0 * r;
    for (int it = 0; it < 12; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (ok(mid)) lo = mid; else hi = mid;
    }
    r = lo;
  } else {
    throw SamplingError("no seed radius keeps all seeds inside the level");
  }
  out.r_max = r;
  const int nr = std::max(1, opt.radii);
  const double r0 = std::min(opt.r_min, r);
  for (int i = 0; i < nr; ++i)
    out.radii.push_back(nr == 1 ? r : r0 * std::pow(r / r0, static_cast<double>(i) / (nr - 1)));
  return out;
}

OrbitPoint f1_step(const OrbitPoint& x, const CartanVector& h, double s, double dt) {
  const Mat hm = h.matrix();
  auto field = [&](const OrbitPoint& p) { return Mat(s * TangentSpace(p).project(hm)); };
  const Mat& y = x.matrix();
  const Mat k1 = field(x);
  const Mat k2 = field(retract(y + 0.5 * dt * k1));
  const Mat k3 = field(retract(y + 0.5 * dt * k2));
  const Mat k4 = field(retract(y + dt * k3));
  return retract(y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

FlowLine f1_flow_to_level(const OrbitPoint& x0, const CartanVector& h, double s, double level, double arc_cap,
                          double dt_cap, int max_steps) {
  FlowLine out;
  const double ftol = 1e-12 * std::max(1.0, std::abs(level));
  auto f1 = [&](const OrbitPoint& p) { return potential(h, p).real(); };
  auto crossed = [&](double f) { return s < 0 ? f < level : f > level; };
  auto at_level = [&](double f) { return !crossed(f) && std::abs(f - level) <= ftol; };
  OrbitPoint x = x0;
  double t = 0.0;
  out.points.push_back(x);
  out.times.push_back(t);
  if (at_level(f1(x))) {
    out.reached = true;
    return out;
  }
  for (int k = 0; k < max_steps; ++k) {
    const double nf = b_norm(TangentSpace(x).project(h.matrix()));
    if (!(nf > 0)) break;
    const double dt = std::min(dt_cap, arc_cap / nf);
    OrbitPoint y = f1_step(x, h, s, dt);
    const double fy = f1(y);
    if (!crossed(fy)) {
      t += dt;
      x = y;
      out.points.push_back(x);
      out.times.push_back(t);
      if (at_level(fy)) {
        out.reached = true;
        return out;
      }
      continue;
    }
    // Illinois regula falsi on the step length, keeping the kept end uncrossed
    double lo = 0.0, hi = dt, best_dt = 0.0;
    double glo = f1(x) - level, ghi = fy - level;
    OrbitPoint best = x;
    int side = 0;
    for (int it = 0; it < 100; ++it) {
      double mid = (it < 60 && ghi != glo) ? (lo * ghi - hi * glo) / (ghi - glo) : 0.5 * (lo + hi);
      if (!(mid > lo && mid < hi)) mid = 0.5 * (lo + hi);
      OrbitPoint ym = f1_step(x, h, s, mid);
      const double fm = f1(ym);
      if (crossed(fm)) {
        hi = mid;
        ghi = fm - level;
        if (side == -1) glo *= 0.5;
        side = -1;
      } else {
        lo = mid;
        glo = fm - level;
        best = ym;
        best_dt = mid;
        if (at_level(fm)) break;
        if (side == 1) ghi *= 0.5;
        side = 1;
      }
      if (hi - lo <= 1e-17 * std::max(1.0, dt)) break;
    }
    out.points.push_back(best);
    out.times.push_back(t + best_dt);
    out.reached = at_level(f1(best));
    return out;
  }
  return out;
}

Thimble trace_thimble(int j, Sign sign, const CartanVector& h, const ThimbleOptions& opt) {
  const int n = h.rank();
  if (!(opt.c_offset > 0)) throw ConfigError("c_offset must be positive");
  if (opt.directions < 1) throw ConfigError("directions must be positive");
  Thimble th;
  th.j = j;
  th.sign = sign;
  th.h = h;
  th.graph = m_j_pm(n, j, sign);
  const OrbitPoint crit = critical_point(n, j);
  const Cx fc = potential(h, crit);
  th.f1_critical = fc.real();
  th.f2_critical = fc.imag();
  const double s = sign == Sign::Minus ? -1.0 : 1.0;
  th.level = th.f1_critical + s * opt.c_offset;
  const ThimbleSeeds seeds = thimble_seeds(j, th.graph, h, th.level, opt);
  th.r_max = seeds.r_max;
  const double dt_cap = 0.2 / top_rate(th.graph, j, h);
  const CVec ej = unit(n + 1, j);

  auto add = [&](const OrbitPoint& p, int seed, int radius, double arc, bool boundary) {
    const Cx f = potential(h, p);
    th.samples.push_back({p, f.real(), f.imag(), graph_membership(p, th.graph), seed, radius, arc, boundary});
  };
  add(crit, -1, -1, 0.0, false);
  for (size_t ri = 0; ri < seeds.radii.size(); ++ri) {
    for (size_t di = 0; di < seeds.deltas.size(); ++di) {
      const OrbitPoint x0 = graph_point(CVec(ej + seeds.radii[ri] * seeds.deltas[di]), th.graph);
      const FlowLine fl = f1_flow_to_level(x0, h, s, th.level, opt.step, dt_cap, opt.max_steps);
      if (!fl.reached) {
        std::ostringstream os;
        os << "trajectory (direction " << di << ", radius " << ri << ") did not reach the level";
        throw IntegrityError(os.str());
      }
      for (size_t k = 0; k < fl.points.size(); ++k)
        add(fl.points[k], static_cast<int>(di), static_cast<int>(ri), fl.times[k], k + 1 == fl.points.size());
    }
  }
  const auto worst = std::max_element(th.samples.begin(), th.samples.end(),
                                      [](const auto& a, const auto& b) { return a.graph_residual < b.graph_residual; });
  if (worst->graph_residual > opt.integrity_tol) {
    std::ostringstream os;
    os.precision(17);
    os << "flow left the graph: residual " << worst->graph_residual << " at direction " << worst->seed << ", radius "
       << worst->radius << ", arc " << worst->arc;
    throw IntegrityError(os.str());
  }
  return th;
}

LagrangianCheck lagrangian_check(const std::vector<ThimbleSample>& samples, double step, int k, int max_anchors) {
  if (samples.size() < 2) throw SamplingError("lagrangian_check needs at least two samples");
  const auto count = static_cast<Eigen::Index>(samples.size());
  RMat pts(2 * samples[0].point.matrix().size(), count);
  for (Eigen::Index i = 0; i < count; ++i) pts.col(i) = realify(samples[i].point.matrix());
  LagrangianCheck out;
  const Eigen::Index stride = std::max<Eigen::Index>(1, (count + max_anchors - 1) / max_anchors);
  std::vector<Eigen::Index> order(count);
  for (Eigen::Index a = 0; a < count; a += stride) {
    ++out.anchors;
    const RVec d2 = (pts.colwise() - pts.col(a)).colwise().squaredNorm();
    std::iota(order.begin(), order.end(), 0);
    // drop the anchor itself and exact duplicates
    auto mid = std::partition(order.begin(), order.end(), [&](Eigen::Index i) { return d2(i) > 1e-18; });
    const auto avail = std::distance(order.begin(), mid);
    if (avail == 0) continue;
    const auto take = std::min<std::ptrdiff_t>(k, avail);
    std::partial_sort(order.begin(), order.begin() + take, mid,
                      [&](Eigen::Index p, Eigen::Index q) { return d2(p) < d2(q); });
    out.max_nn_distance = std::max(out.max_nn_distance, std::sqrt(d2(order[0])));
    std::vector<Mat> sec;
    for (std::ptrdiff_t i = 0; i < take; ++i)
      sec.push_back(samples[order[i]].point.matrix() - samples[a].point.matrix());
    for (size_t p = 0; p < sec.size(); ++p)
      for (size_t q = p + 1; q < sec.size(); ++q) {
        const double v = std::abs(omega(sec[p], sec[q])) / (b_norm(sec[p]) * b_norm(sec[q]));
        out.max_omega = std::max(out.max_omega, v);
        ++out.pairs;
      }
  }
  out.sparse = out.max_nn_distance > 10.0 * step;
  return out;
}

HorizontalLift horizontal_lift_check(const OrbitPoint& z, const CartanVector& h, double tol) {
  const Mat f1 = kaehler_gradients(z, h).f1;
  HorizontalLift out;
  out.f1_norm = b_norm(f1);
  if (!(out.f1_norm > tol)) throw ConditioningError("gradient too small: point is near-critical");
  auto df = [&](const Mat& v) { return killing_form(h.matrix(), v); };
  const Cx p = df(f1), q = df(Mat(kI * f1));
  Eigen::Matrix2d m;
  m << p.real(), q.real(), p.imag(), q.imag();
  const Eigen::Vector2d ab = m.fullPivLu().solve(Eigen::Vector2d(1.0, 0.0));
  out.a = ab(0);
  out.b = ab(1);
  return out;
}

double fibre_orthogonality(const OrbitPoint& z, const CartanVector& h, int count, std::mt19937_64& rng) {
  const TangentSpace ts(z);
  const std::vector<Mat> e = ts.complex_basis();
  const Mat f1 = ts.project(h.matrix());
  CVec ell(static_cast<Eigen::Index>(e.size()));
  for (size_t k = 0; k < e.size(); ++k) ell(static_cast<Eigen::Index>(k)) = (h.matrix() * e[k]).trace();
  std::normal_distribution<double> nd;
  double worst = 0.0;
  for (int s = 0; s < count; ++s) {
    CVec c(ell.size());
    for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = Cx(nd(rng), nd(rng));
    // remove the component along conj(ell) so that sum c_k ell_k = 0
    c -= (ell.transpose() * c)(0) / ell.squaredNorm() * ell.conjugate();
    Mat v = Mat::Zero(z.dim(), z.dim());
    for (size_t k = 0; k < e.size(); ++k) v += c(static_cast<Eigen::Index>(k)) * e[k];
    worst = std::max(worst, std::abs(omega(f1, v)) / (b_norm(f1) * b_norm(v)));
  }
  return worst;
}

}  // namespace lgm
