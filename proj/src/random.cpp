#include "lgm/random.hpp"

#include <cmath>

#include "lgm/tangent.hpp"

namespace lgm {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

CVec random_vector(int dim, Rng& rng) {
  std::normal_distribution<double> nd;
  CVec v(dim);
  for (int k = 0; k < dim; ++k) v(k) = Cx(nd(rng), nd(rng));
  return v;
}

Mat random_matrix(int dim, Rng& rng) {
  std::normal_distribution<double> nd;
  Mat m(dim, dim);
  for (Eigen::Index k = 0; k < m.size(); ++k) m(k) = Cx(nd(rng), nd(rng));
  return m;
}

static Mat traceless(Mat m) {
  const auto d = m.rows();
  m -= (m.trace() / static_cast<double>(d)) * Mat::Identity(d, d);
  return m;
}

Mat random_sl(int n, Rng& rng) { return traceless(random_matrix(n + 1, rng)); }

Mat random_hermitian_sl(int n, Rng& rng) {
  const Mat g = random_matrix(n + 1, rng);
  return traceless(0.5 * (g + g.adjoint()));
}

Mat random_antihermitian_sl(int n, Rng& rng) {
  const Mat g = random_matrix(n + 1, rng);
  return traceless(0.5 * (g - g.adjoint()));
}

Mat random_su(int n, Rng& rng) {
  const Eigen::HouseholderQR<Mat> qr(random_matrix(n + 1, rng));
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k <= n; ++k) q.col(k) *= std::polar(1.0, std::arg(r(k, k)));
  const Cx d = q.determinant();
  q.col(0) /= d;
  return q;
}

OrbitPoint random_orbit_point(int n, Rng& rng, double min_transversality) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const CVec u = random_vector(n + 1, rng).normalized();
    const CVec eta = random_vector(n + 1, rng).normalized();
    if (std::abs(eta.dot(u)) < min_transversality) continue;
    return OrbitPoint(ProjLine(u), ProjHyperplane::orthogonal_to(eta));
  }
  throw SamplingError("no transversal pair found");
}

Mat random_tangent(const OrbitPoint& x, Rng& rng) {
  const Mat v = TangentSpace(x).project(random_matrix(x.dim(), rng));
  return v / b_norm(v);
}

}  // namespace lgm
