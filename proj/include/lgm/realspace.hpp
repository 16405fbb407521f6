#pragma once

#include <vector>

#include "lgm/core.hpp"

namespace lgm {

// Real coordinates of a complex matrix in which the Euclidean dot product
// equals b_tau.  Layout: real parts column-major, then imaginary parts.
RVec realify(const Mat& x);
Mat complexify(const RVec& v, int dim);

// Orthonormal columns spanning the real span of the inputs; directions with
// singular value below rel_cutoff * largest are dropped.
RMat real_span(const std::vector<Mat>& vecs, double rel_cutoff = 1e-10);
RMat real_span(const RMat& cols, double rel_cutoff = 1e-10);

// Sines of the principal angles between span(qa) and span(qb), ascending,
// one per column of qa.  Both inputs orthonormal.
RVec principal_sines(const RMat& qa, const RMat& qb);

// Orthonormal basis of span(qa) ∩ span(qb): directions of qa whose
// principal-angle sine is below cutoff.
RMat intersect(const RMat& qa, const RMat& qb, double cutoff = tol::kIntersection);

std::vector<Mat> to_matrices(const RMat& cols, int dim);

}  // namespace lgm
