#pragma once

#include <cstddef>
#include <vector>

#include "latsieve/rational.hpp"

namespace latsieve {

// Basis matrices are row major: each row is one lattice vector.
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
Int norm_sq(const IntVec& a);
Rat norm_sq(const RatVec& a);
bool is_zero(const IntVec& a);

IntMat identity_matrix(size_t n);
IntMat transpose(const IntMat& a);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_vec_mul_left(const IntVec& x, const IntMat& b);  // x * B (row vector times matrix)

/// Throws std::invalid_argument unless `a` is non-empty and rectangular.
void check_rectangular(const IntMat& a);

/// Exact determinant of a square integer matrix (fraction-free elimination).
Int determinant(IntMat a);

/// det(B * B^T), defined for any full-row-rank basis; equals det(B)^2
/// when B is square.
Int gram_determinant(const IntMat& basis);

/// Exact inverse of a square integer matrix. Throws std::invalid_argument
/// when the matrix is singular.
RatMat rational_inverse(const IntMat& a);

}  // namespace latsieve
