#pragma once

#include <cstdint>
#include <vector>

#include "latsieve/linalg.hpp"

namespace latsieve {

enum class SieveAlgorithm { kList, kPairs };

struct SieveParams {
    // Shared
    size_t samples = 0;   // 0 = pick automatically from the dimension
    uint64_t seed = 1;
    int max_passes = 10000;

    // Direct list sieve
    double gamma = 0.95;                // per-pass norm shrink factor, in (0,1)
    double sampler_width_factor = 1.0;  // gaussian sampler width = factor * max ||b*_i||

    // Perturbation-pair sieve
    double pair_gamma = 0.70;   // per-pass shrink factor for the perturbed points
    double xi = 0.685;          // perturbation radius = xi * target length
    double target_scale = 1.0;  // target length guess = scale * gaussian heuristic
};

struct SieveStats {
    size_t samples = 0;
    int passes = 0;
    uint64_t reductions = 0;
    uint64_t collisions = 0;  // reductions that produced the zero vector
    uint64_t distance_evals = 0;
    size_t peak_list_size = 0;
    size_t final_list_size = 0;
    std::vector<size_t> centers_per_pass;
};

struct SieveResult {
    IntVec vector;  // a shortest vector found (exact integers)
    Int norm_sq;    // its exact squared norm
    SieveStats stats;
};

size_t default_sample_count(SieveAlgorithm alg, size_t dim);

/// Randomized sieving over a list of sampled lattice vectors: each pass
/// promotes a greedy subset to centers and maps every remaining vector v
/// to v - c for a center within gamma * R, shrinking the maximum norm
/// geometrically until the list collapses. Returns the shortest nonzero
/// vector observed. Expects a reduced basis (entries below 2^24).
SieveResult sieve_shortest_list(const IntMat& basis, const SieveParams& params = {});

/// Randomized sieving over perturbation pairs (x, x + ell): x is uniform
/// noise in a ball of radius xi * mu, ell a lattice vector. Passes shrink
/// the perturbed points y = x + ell towards the noise floor while keeping
/// y - x in the lattice exactly; the surviving lattice vectors and their
/// pairwise differences yield the result. Expects a reduced basis.
SieveResult sieve_shortest_pairs(const IntMat& basis, const SieveParams& params = {});

}  // namespace latsieve
