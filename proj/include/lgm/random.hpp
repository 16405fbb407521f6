#pragma once

#include <random>

#include "lgm/orbit.hpp"

namespace lgm {

using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, std::uint64_t stream);

CVec random_vector(int dim, Rng& rng);
Mat random_matrix(int dim, Rng& rng);
// traceless
Mat random_sl(int n, Rng& rng);
Mat random_hermitian_sl(int n, Rng& rng);
Mat random_antihermitian_sl(int n, Rng& rng);
// Haar-like element of SU(n+1)
Mat random_su(int n, Rng& rng);
// random transversal pair with |(u, eta)| >= min_transversality
OrbitPoint random_orbit_point(int n, Rng& rng, double min_transversality = 0.3);
// b_tau-unit tangent vector
Mat random_tangent(const OrbitPoint& x, Rng& rng);

}  // namespace lgm
