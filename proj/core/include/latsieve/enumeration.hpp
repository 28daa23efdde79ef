#pragma once

#include <cstdint>

#include "latsieve/linalg.hpp"

namespace latsieve {

struct EnumerationResult {
    IntVec coeffs;   // x with vector = x * B
    IntVec vector;   // the shortest nonzero lattice vector found
    Int norm_sq;     // exact squared norm
    uint64_t nodes;  // search tree nodes visited
};

/// Exhaustive shortest-vector search over the lattice spanned by the rows
/// of `basis`. The tree is pruned with double-precision partial norms; every
/// improving candidate is re-evaluated exactly, so the returned norm is the
/// exact lattice minimum as long as distinct squared norms near the minimum
/// differ by more than ~1e-9 relative (always true for the integer bases
/// this project works with). Reduce the basis first; the running time on an
/// unreduced basis is far worse.
EnumerationResult enumerate_shortest(const IntMat& basis);

/// Convenience wrapper returning just the exact squared norm of a shortest
/// nonzero vector.
Int shortest_norm_sq(const IntMat& basis);

}  // namespace latsieve
