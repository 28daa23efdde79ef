#pragma once

#include "latsieve/linalg.hpp"

namespace latsieve {

/// Exact Gram-Schmidt data of a basis with linearly independent rows.
///
/// mu is lower triangular with unit diagonal; bstar holds the orthogonal
/// vectors and bstar_sq their squared norms, all as exact rationals.
struct Gso {
    RatMat mu;
    RatMat bstar;
    RatVec bstar_sq;

    size_t rank() const { return bstar_sq.size(); }
};

/// Throws std::invalid_argument when the rows are linearly dependent.
Gso compute_gso(const IntMat& basis);

std::vector<std::vector<double>> mu_to_double(const Gso& g);
std::vector<double> bstar_sq_to_double(const Gso& g);

/// Product of the ||b*_i||^2, i.e. det(B B^T), as an exact rational.
Rat gso_gram_determinant(const Gso& g);

}  // namespace latsieve
