#include "lgm/flow.hpp"

#include <algorithm>
#include <cmath>

#include "lgm/tangent.hpp"

namespace lgm {

Mat z_field(const Mat& x, const CartanVector& h) {
  if (x.rows() != h.size()) throw ShapeError("z_field: size mismatch");
  return bracket(x, bracket(tau(x), h.matrix()));
}

Mat z_differential(const Mat& x, const CartanVector& h, const Mat& v) {
  const Mat hm = h.matrix();
  return bracket(v, bracket(tau(x), hm)) + bracket(x, bracket(tau(v), hm));
}

double dh(const CartanVector& h, const Mat& v) { return b_tau(v, h.matrix()); }

double metric_m(const OrbitPoint& x, const Mat& u, const Mat& v, double tangency_tol) {
  AdInverse inv(x.matrix());
  if (inv.off_image(u) > tangency_tol || inv.off_image(v) > tangency_tol)
    throw TangencyError("metric_m: argument is not tangent to the orbit");
  return b_tau(inv.apply(u), inv.apply(v));
}

std::vector<Mat> LinearizationSpectrum::stable_basis() const {
  std::vector<Mat> out;
  for (const auto& m : modes)
    if (!m.degenerate) out.insert(out.end(), m.minus.begin(), m.minus.end());
  return out;
}

std::vector<Mat> LinearizationSpectrum::unstable_basis() const {
  std::vector<Mat> out;
  for (const auto& m : modes)
    if (!m.degenerate) out.insert(out.end(), m.plus.begin(), m.plus.end());
  return out;
}

std::vector<double> LinearizationSpectrum::eigenvalues() const {
  std::vector<double> out;
  for (const auto& m : modes) {
    if (m.degenerate) continue;
    const double r = std::abs(m.rate);
    out.insert(out.end(), {-r, -r, r, r});
  }
  std::sort(out.begin(), out.end());
  return out;
}

int LinearizationSpectrum::degenerate_count() const {
  return static_cast<int>(std::count_if(modes.begin(), modes.end(), [](const RootMode& m) { return m.degenerate; }));
}

LinearizationSpectrum linearize(const OrbitPoint& x, const CartanVector& h, double tol) {
  const Mat& xm = x.matrix();
  const double scale = std::max(1.0, xm.norm() * xm.norm() * h.diag().norm());
  if (b_norm(z_field(xm, h)) > tol * scale) throw NotASingularityError("linearize: Z(x) does not vanish");
  Mat off = xm;
  off.diagonal().setZero();
  if (off.norm() > tol * std::max(1.0, xm.norm())) throw NotASingularityError("linearize: x is not diagonal");
  CartanVector xc(xm.diagonal());
  const RootSystem rs(x.rank());
  LinearizationSpectrum out;
  for (const Root a : rs.positive_roots()) {
    RootMode m;
    m.root = a;
    m.rate = (root_eval(a, xc) * root_eval(a, h)).real();
    m.degenerate = std::abs(m.rate) <= tol * std::max(1.0, scale);
    const Mat A = rs.a_vector(a), S = rs.s_vector(a);
    std::array<Mat, 2> compact{A, kI * S}, noncompact{S, kI * A};
    if (m.rate >= 0) {
      m.minus = compact;
      m.plus = noncompact;
    } else {
      m.minus = noncompact;
      m.plus = compact;
    }
    out.modes.push_back(m);
  }
  return out;
}

double default_step(const CartanVector& h) {
  const int n = h.rank();
  double top = 0.0;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) top = std::max(top, (n + 1) * std::abs(h[i] - h[j]));
  if (top == 0.0) throw ConfigError("H must be regular");
  return 1e-2 / top;
}

static int nearest_critical(const Mat& x) {
  const int n = static_cast<int>(x.rows()) - 1;
  int best = 0;
  double bd = 1e300;
  for (int j = 0; j <= n; ++j) {
    Mat c = -Mat::Identity(n + 1, n + 1);
    c(j, j) = n;
    const double d = (x - c).norm();
    if (d < bd) {
      bd = d;
      best = j;
    }
  }
  return best;
}

Trajectory integrate(const OrbitPoint& x0, const CartanVector& h, const FlowOptions& opt) {
  const double step = opt.step > 0 ? opt.step : default_step(h);
  const double sgn = opt.direction == Direction::Forward ? 1.0 : -1.0;
  Trajectory tr;
  OrbitPoint x = x0;
  double t = 0.0;
  auto record = [&](const OrbitPoint& p, double zn) {
    const Cx f = potential(h, p);
    tr.times.push_back(t);
    tr.points.push_back(p);
    tr.h_values.push_back(f.real());
    tr.f2_values.push_back(f.imag());
    tr.orbit_residuals.push_back(p.residual());
    tr.z_norms.push_back(zn);
  };
  for (int k = 0;; ++k) {
    const Mat z = z_field(x.matrix(), h);
    const double zn = b_norm(z);
    record(x, zn);
    if (zn < opt.conv_tol) {
      tr.converged = true;
      tr.limit = nearest_critical(x.matrix());
      break;
    }
    if (k == opt.max_steps) break;
    const Mat& y = x.matrix();
    const Mat k1 = sgn * z;
    const Mat k2 = sgn * z_field(Mat(y + 0.5 * step * k1), h);
    const Mat k3 = sgn * z_field(Mat(y + 0.5 * step * k2), h);
    const Mat k4 = sgn * z_field(Mat(y + step * k3), h);
    const Mat next = y + (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (opt.throw_on_drift) {
      x = retract(next, opt.max_drift);
    } else {
      double drift = 0.0;
      const OrbitPoint r = retract_unchecked(next, &drift);
      if (!(drift <= opt.max_drift)) {
        tr.escaped = true;
        break;
      }
      x = r;
    }
    t += step;
  }
  return tr;
}

double nongradient_witness(const CartanVector& h, const Mat& base, const Mat& v, const Mat& w) {
  // d(alpha)(v, w) = (w, dZ(v)) - (v, dZ(w))
  return std::abs(b_tau(w, z_differential(base, h, v)) - b_tau(v, z_differential(base, h, w)));
}

double nongradient_closed_form(const CartanVector& h, const CartanVector& h1, const Mat& v, const Mat& w) {
  const Mat hm = h.matrix(), h1m = h1.matrix();
  return std::abs(-2.0 * b_tau(bracket(hm, bracket(h1m, tau(w))), v));
}

Cx lemma_pairing(const CartanVector& z, const Mat& y, const CartanVector& h) {
  return hermitian_form(z_field(Mat(z.matrix() + y), h), y);
}

}  // namespace lgm
