#pragma once

#include <cstdint>

#include "latsieve/gso.hpp"
#include "latsieve/linalg.hpp"

namespace latsieve {

struct LllParams {
    Rat delta = Rat(3, 4);  // Lovasz constant, must lie in (1/4, 1]
};

struct LllStats {
    uint64_t swaps = 0;
    uint64_t size_reductions = 0;
};

/// Reduces `basis` in place with exact rational arithmetic. The rows must
/// be linearly independent. Returns pass statistics.
LllStats lll_reduce(IntMat& basis, const LllParams& params = {});

/// Same, but also accumulates the unimodular transform U with
/// reduced = U * original.
LllStats lll_reduce(IntMat& basis, IntMat& transform, const LllParams& params = {});

/// |mu_ij| <= 1/2 for all i > j, checked exactly.
bool is_size_reduced(const IntMat& basis);

/// ||b*_k||^2 >= (delta - mu_{k,k-1}^2) ||b*_{k-1}||^2 for all k, exactly.
bool satisfies_lovasz(const IntMat& basis, const Rat& delta);

}  // namespace latsieve
