#pragma once

#include <cstdint>

#include "latsieve/linalg.hpp"

namespace latsieve {

/// Random lattice with prime determinant in Hermite normal form:
///
///   [ p  0 ... 0 ]          p: prime with det_bits bits
///   [ x1 1 ... 0 ]          xi: uniform in [0, p)
///   [ ...        ]
///   [ xk 0 ... 1 ]
///
/// Deterministic for a fixed (dim, det_bits, seed). This is the standard
/// hard-instance family for shortest vector experiments.
IntMat random_prime_hnf_basis(size_t dim, unsigned det_bits, uint64_t seed);

/// Random unimodular matrix built from elementary row operations
/// (determinant +/-1 by construction). `ops` defaults to 8*dim.
IntMat random_unimodular(size_t dim, uint64_t seed, size_t ops = 0);

/// basis premultiplied by a random unimodular matrix: same lattice,
/// scrambled generators.
IntMat scrambled_basis(const IntMat& basis, uint64_t seed);

/// Gaussian heuristic for the length of a shortest nonzero vector:
/// the radius of a ball whose volume equals the lattice covolume.
double gaussian_heuristic(const IntMat& basis);

}  // namespace latsieve
