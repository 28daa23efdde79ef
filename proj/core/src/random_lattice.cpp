#include "latsieve/random_lattice.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "latsieve/gso.hpp"
#include "latsieve/sampling.hpp"
#include "latsieve/volume.hpp"

namespace latsieve {

namespace {

// Random non-negative integer below 2^bits assembled from generator words,
// so the result is identical on every platform.
Int random_bits(unsigned bits, Rng& rng) {
    Int v = 0;
    unsigned filled = 0;
    while (filled < bits) {
        unsigned take = std::min(64u, bits - filled);
        uint64_t w = rng();
        if (take < 64) w >>= (64 - take);
        v <<= take;
        v += Int(static_cast<unsigned long>(w));  // unsigned long is 64-bit here
        filled += take;
    }
    return v;
}

Int random_below(const Int& bound, Rng& rng) {
    unsigned bits = static_cast<unsigned>(mpz_sizeinbase(bound.get_mpz_t(), 2));
    while (true) {
        Int v = random_bits(bits, rng);
        if (v < bound) return v;
    }
}

}  // namespace

IntMat random_prime_hnf_basis(size_t dim, unsigned det_bits, uint64_t seed) {
    if (dim == 0 || det_bits < 2)
        throw std::invalid_argument("random_prime_hnf_basis: need dim >= 1 and det_bits >= 2");
    Rng rng(seed ^ 0x9e3779b97f4a7c15ull);

    // Prime with exactly det_bits bits.
    Int p;
    do {
        Int candidate = random_bits(det_bits - 1, rng) + (Int(1) << (det_bits - 1));
        mpz_nextprime(p.get_mpz_t(), candidate.get_mpz_t());
    } while (mpz_sizeinbase(p.get_mpz_t(), 2) != det_bits);

    IntMat b(dim, IntVec(dim, 0));
    b[0][0] = p;
    for (size_t i = 1; i < dim; ++i) {
        b[i][0] = random_below(p, rng);
        b[i][i] = 1;
    }
    return b;
}

IntMat random_unimodular(size_t dim, uint64_t seed, size_t ops) {
    if (dim == 0) throw std::invalid_argument("random_unimodular: dim must be positive");
    if (ops == 0) ops = 8 * dim;
    Rng rng(seed ^ 0xc2b2ae3d27d4eb4full);
    IntMat u = identity_matrix(dim);
    if (dim == 1) return u;
    for (size_t s = 0; s < ops; ++s) {
        size_t i = rng() % dim;
        size_t j = rng() % dim;
        if (i == j) {
            for (auto& e : u[i]) e = -e;
            continue;
        }
        int64_t c = static_cast<int64_t>(rng() % 7) - 3;
        if (c == 0) c = 1;
        for (size_t k = 0; k < dim; ++k) u[i][k] += c * u[j][k];
    }
    return u;
}

IntMat scrambled_basis(const IntMat& basis, uint64_t seed) {
    check_rectangular(basis);
    return mat_mul(random_unimodular(basis.size(), seed), basis);
}

double gaussian_heuristic(const IntMat& basis) {
    Gso g = compute_gso(basis);
    double log_det = 0.5 * log_rat(gso_gram_determinant(g));
    double n = static_cast<double>(g.rank());
    return std::exp((log_det - log_ball_volume(static_cast<unsigned>(g.rank()), 1.0)) / n);
}

}  // namespace latsieve
