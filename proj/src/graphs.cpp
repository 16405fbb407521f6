#include "lgm/graphs.hpp"

#include <cmath>

#include "lgm/realspace.hpp"

namespace lgm {

std::string to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::Positive: return "positive";
    case Definiteness::Negative: return "negative";
    case Definiteness::Indefinite: return "indefinite";
    case Definiteness::Complex: return "complex";
  }
  return "?";
}

GraphSpec::GraphSpec(CVec m) : m_(std::move(m)) {
  if (m_.size() < 2) throw ShapeError("graph spec needs at least two entries");
  for (Eigen::Index k = 0; k < m_.size(); ++k)
    if (std::abs(std::abs(m_(k)) - 1.0) > 1e-12) throw ShapeError("torus entries must have unit modulus");
}

GraphSpec GraphSpec::identity(int n) { return GraphSpec(CVec::Ones(n + 1)); }

bool GraphSpec::is_involution(double tol) const {
  for (Eigen::Index k = 0; k < m_.size(); ++k)
    if (std::abs(m_(k) * m_(k) - 1.0) > tol) return false;
  return true;
}

std::vector<double> GraphSpec::phases() const {
  std::vector<double> out;
  for (Eigen::Index k = 0; k < m_.size(); ++k) out.push_back(std::arg(m_(k)));
  return out;
}

GraphSpec m_j_pm(int n, int j, Sign s) {
  if (n < 1 || j < 0 || j > n) throw ShapeError("m_j_pm: index out of range");
  if (n % 2 == 1 && j != 0 && j != n) throw ParityError("odd rank admits only the end slots");
  const int j1 = j + 1;
  const double parity = (j1 % 2 == 0) ? 1.0 : -1.0;
  const double pre = s == Sign::Plus ? -parity : parity;
  CVec m(n + 1);
  for (int k = 0; k <= n; ++k) {
    double e = k < j ? 1.0 : -1.0;
    if (k == j) e = s == Sign::Plus ? 1.0 : -1.0;
    m(k) = pre * e;
  }
  return GraphSpec(m);
}

Mat chart_matrix(const CVec& u, const CVec& d) {
  const auto dim = u.size();
  const Eigen::RowVectorXcd phi = u.adjoint() * d.asDiagonal();
  const Cx den = (phi * u)(0);
  return -Mat::Identity(dim, dim) + (static_cast<double>(dim) / den) * (u * phi);
}

Mat chart_derivative(const CVec& u, const CVec& d, const CVec& delta) {
  const auto dim = u.size();
  using Row = Eigen::RowVectorXcd;
  const Row phi = u.adjoint() * d.asDiagonal();
  const Row dphi = delta.adjoint() * d.asDiagonal();
  const Cx den = (phi * u)(0);
  const Cx dden = (dphi * u)(0) + (phi * delta)(0);
  const Mat dp = (delta * phi + u * dphi) / den - (u * phi) * (dden / (den * den));
  return static_cast<double>(dim) * dp;
}

OrbitPoint twisted_point(const CVec& u, const CVec& d, double tol) {
  const CVec eta = d.conjugate().asDiagonal() * u;
  return OrbitPoint(ProjLine(u), ProjHyperplane::orthogonal_to(eta), tol);
}

OrbitPoint graph_point(const CVec& u, const GraphSpec& g, double tol) {
  if (u.size() != g.dim()) throw ShapeError("graph_point: size mismatch");
  return twisted_point(u, g.diag().conjugate(), tol);
}

double graph_membership(const OrbitPoint& x, const GraphSpec& g) {
  if (x.dim() != g.dim()) throw ShapeError("graph_membership: size mismatch");
  const CVec mu = g.diag().asDiagonal() * x.eigenline();
  return (x.hyperplane().adjoint() * mu).cwiseAbs().maxCoeff();
}

OrbitPoint untwist(const OrbitPoint& x, const GraphSpec& g) {
  const Mat w = g.diag().conjugate().asDiagonal() * x.hyperplane();
  return OrbitPoint(ProjLine(x.eigenline()), ProjHyperplane(w));
}

double hermitian_residual(const OrbitPoint& x) {
  const Mat& m = x.matrix();
  return (m - m.adjoint()).norm();
}

RMat graph_tangent_space(const OrbitPoint& x, const GraphSpec& g) {
  const auto dim = x.dim();
  const CVec& u = x.eigenline();
  const CVec d = g.diag().conjugate();
  std::vector<Mat> cols;
  for (int k = 0; k < dim; ++k) {
    CVec e = CVec::Zero(dim);
    e(k) = 1.0;
    cols.push_back(chart_derivative(u, d, e));
    cols.push_back(chart_derivative(u, d, CVec(kI * e)));
  }
  RMat q = real_span(cols, 1e-9);
  if (q.cols() != 2 * x.rank()) throw MembershipError("graph chart is degenerate at this point");
  return q;
}

GraphTangent graph_tangent_basis(const GraphSpec& g, int j) {
  const int n = g.dim() - 1;
  const RootSystem rs(n);
  const Mat x = critical_point(n, j).matrix();
  GraphTangent out;
  for (int k = 0; k <= n; ++k) {
    if (k == j) continue;
    const Root a{k, j};
    const Cx e = g.root_factor(k, j);
    const Mat xa = rs.root_vector(a), xm = rs.root_vector(a.negative());
    const Mat g1 = xa - e * xm;
    const Mat g2 = kI * (xa + e * xm);
    for (const Mat& gen : {g1, g2}) {
      out.k.push_back(k);
      out.generators.push_back(gen);
      out.vectors.push_back(bracket(gen, x));
    }
  }
  return out;
}

Cx hessian_full(const Mat& A, const Mat& B, const Mat& critical, const CartanVector& h) {
  return -killing_form(bracket(B, critical), bracket(A, h.matrix()));
}

Cx hessian_full(const Mat& A, const Mat& B, const WeylElement& w, const CartanVector& h) {
  return hessian_full(A, B, weyl_action(w, minimal_h0(h.rank())).matrix(), h);
}

HessianReport hessian_restricted(const CartanVector& h, int j, const GraphSpec& g) {
  const int n = h.rank();
  if (g.dim() != n + 1) throw ShapeError("hessian_restricted: size mismatch");
  const CartanVector wh0 = weyl_action(WeylElement::moving_first_to(n + 1, j), minimal_h0(n));
  HessianReport rep;
  rep.j = j;
  bool all_real = true, pos = true, neg = true;
  for (int k = 0; k <= n; ++k) {
    if (k == j) continue;
    HessianRow r;
    r.k = k;
    r.alpha_x = root_eval({k, j}, wh0);
    r.alpha_h = root_eval({k, j}, h);
    r.factor = g.root_factor(k, j);
    r.value = -2.0 * r.alpha_x * r.alpha_h * r.factor;
    if (std::abs(r.value.imag()) > 1e-12 * std::max(1.0, std::abs(r.value))) all_real = false;
    if (!(r.value.real() > 0)) pos = false;
    if (!(r.value.real() < 0)) neg = false;
    rep.rows.push_back(r);
  }
  rep.definiteness = !all_real ? Definiteness::Complex
                     : pos     ? Definiteness::Positive
                     : neg     ? Definiteness::Negative
                               : Definiteness::Indefinite;
  return rep;
}

static CVec random_unit(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  CVec u(dim);
  for (int k = 0; k < dim; ++k) u(k) = Cx(nd(rng), nd(rng));
  return u.normalized();
}

template <class Make, class Transv>
static RealityResult sample_reality(const CartanVector& h, int samples, std::mt19937_64& rng, double reject,
                                    Make make, Transv transv) {
  RealityResult res;
  const long budget = 100L * std::max(samples, 1);
  long tries = 0;
  while (res.samples < samples) {
    if (++tries > budget) throw SamplingError("no transversal sample within the retry budget");
    const CVec u = random_unit(h.size(), rng);
    if (transv(u) < reject) {
      ++res.rejected;
      continue;
    }
    const OrbitPoint x = make(u);
    res.max_im_f = std::max(res.max_im_f, std::abs(potential(h, x).imag()));
    res.max_im_diag = std::max(res.max_im_diag, x.matrix().diagonal().imag().cwiseAbs().maxCoeff());
    ++res.samples;
  }
  return res;
}

RealityResult reality_check(const CartanVector& h, const GraphSpec& g, int samples, std::mt19937_64& rng,
                            double reject) {
  if (!g.is_involution()) throw ConfigError("reality_check: graph element must be an involution");
  return sample_reality(
      h, samples, rng, reject, [&](const CVec& u) { return graph_point(u, g, 0.0); },
      [&](const CVec& u) { return std::abs(u.dot(g.diag().asDiagonal() * u)); });
}

RealityResult reality_check_diagonal(const CartanVector& h, const RVec& d, int samples, std::mt19937_64& rng,
                                     double reject) {
  if (d.size() != h.size()) throw ShapeError("reality_check_diagonal: size mismatch");
  const CVec dc = d.cast<Cx>();
  return sample_reality(
      h, samples, rng, reject, [&](const CVec& u) { return twisted_point(u, dc, 0.0); },
      [&](const CVec& u) {
        const CVec du = dc.asDiagonal() * u;
        return std::abs(u.dot(du)) / du.norm();
      });
}

}  // namespace lgm
