#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "latsieve/gso.hpp"
#include "latsieve/linalg.hpp"

namespace latsieve {

using Rng = std::mt19937_64;
using Vec64 = std::vector<int64_t>;

/// Uniform draw in [0,1) built from raw generator words, so results do not
/// depend on standard library distribution internals.
double uniform01(Rng& rng);

/// Standard normal via Box-Muller (same portability note as uniform01).
double gauss(Rng& rng);

/// Uniform point in the n-ball of the given radius.
std::vector<double> sample_ball(size_t n, double radius, Rng& rng);

int64_t dot64(const Vec64& a, const Vec64& b);
int64_t norm_sq64(const Vec64& a);

/// Precomputed data shared by the samplers and the sieves: the basis in
/// machine integers plus double-precision inverse and Gram-Schmidt views.
/// Requires a square nonsingular basis with entries below 2^24; reduce
/// first if the input is larger.
class SieveContext {
  public:
    explicit SieveContext(const IntMat& basis);

    size_t dim() const { return rows_.size(); }
    const std::vector<Vec64>& rows() const { return rows_; }
    const std::vector<std::vector<double>>& rows_d() const { return rows_d_; }
    const std::vector<std::vector<double>>& inverse_d() const { return inv_d_; }
    const std::vector<std::vector<double>>& bstar_d() const { return bstar_d_; }
    const std::vector<double>& bstar_sq_d() const { return bstar_sq_d_; }
    double max_bstar_norm() const { return max_bstar_; }

  private:
    std::vector<Vec64> rows_;
    std::vector<std::vector<double>> rows_d_;
    std::vector<std::vector<double>> inv_d_;
    std::vector<std::vector<double>> bstar_d_;
    std::vector<double> bstar_sq_d_;
    double max_bstar_ = 0.0;
};

/// Randomized nearest-plane sampling: returns a lattice vector whose
/// distribution approximates a discrete Gaussian of the given width
/// (width is an absolute length, e.g. some multiple of max ||b*_i||).
/// May return the zero vector.
Vec64 sample_lattice_gaussian(const SieveContext& ctx, double width, Rng& rng);

/// A perturbation x uniform in the r-ball together with the lattice point
/// ell such that x + ell lies in the fundamental parallelepiped of the
/// basis. Both the perturbed point x + ell and the exact lattice vector
/// ell are recoverable from the pair.
struct PerturbedPair {
    std::vector<double> x;
    Vec64 ell;
};
PerturbedPair sample_perturbed_pair(const SieveContext& ctx, double r, Rng& rng);

}  // namespace latsieve
