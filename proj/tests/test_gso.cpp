#include "doctest.h"
#include "latsieve/gso.hpp"
#include "latsieve/random_lattice.hpp"

using namespace latsieve;

TEST_CASE("gram-schmidt vectors are pairwise orthogonal, exactly") {
    IntMat b{{3, 1, 0}, {1, 2, 1}, {-1, 0, 4}};
    Gso g = compute_gso(b);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < i; ++j) CHECK(dot(g.bstar[i], g.bstar[j]) == Rat(0));
    // rows reconstruct as b_i = sum_j mu_ij b*_j
    for (size_t i = 0; i < 3; ++i)
        for (size_t k = 0; k < 3; ++k) {
            Rat s = 0;
            for (size_t j = 0; j <= i; ++j) s += g.mu[i][j] * g.bstar[j][k];
            CHECK(s == Rat(b[i][k]));
        }
    for (size_t i = 0; i < 3; ++i) CHECK(g.mu[i][i] == Rat(1));
}

TEST_CASE("gso norm product equals the gram determinant") {
    for (uint64_t seed : {4u, 5u}) {
        IntMat b = scrambled_basis(random_prime_hnf_basis(5, 24, seed), seed);
        Gso g = compute_gso(b);
        CHECK(gso_gram_determinant(g) == Rat(gram_determinant(b)));
    }
}

TEST_CASE("dependent rows are rejected") {
    CHECK_THROWS_AS(compute_gso(IntMat{{1, 2}, {2, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(compute_gso(IntMat{{0, 0}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(compute_gso(IntMat{{1, 0}, {0, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("rectangular bases are fine as long as rows are independent") {
    IntMat b{{1, 0, 0, 2}, {0, 3, 1, 0}};
    Gso g = compute_gso(b);
    CHECK(g.rank() == 2);
    CHECK(dot(g.bstar[0], g.bstar[1]) == Rat(0));
}
