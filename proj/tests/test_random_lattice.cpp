#include "doctest.h"
#include "latsieve/random_lattice.hpp"
#include "latsieve/volume.hpp"

#include <cmath>

using namespace latsieve;

TEST_CASE("prime-determinant bases have the advertised shape") {
    IntMat b = random_prime_hnf_basis(8, 40, 5);
    REQUIRE(b.size() == 8);
    REQUIRE(b[0].size() == 8);
    Int p = b[0][0];
    CHECK(mpz_probab_prime_p(p.get_mpz_t(), 30) != 0);
    CHECK(mpz_sizeinbase(p.get_mpz_t(), 2) == 40);
    for (size_t i = 1; i < 8; ++i) {
        CHECK(b[i][i] == 1);
        CHECK(b[i][0] >= 0);
        CHECK(b[i][0] < p);
        for (size_t j = 1; j < 8; ++j)
            if (j != i) CHECK(b[i][j] == 0);
    }
    CHECK(determinant(b) == p);
}

TEST_CASE("generation is deterministic per seed and varies across seeds") {
    CHECK(random_prime_hnf_basis(5, 30, 9) == random_prime_hnf_basis(5, 30, 9));
    CHECK(random_prime_hnf_basis(5, 30, 9) != random_prime_hnf_basis(5, 30, 10));
}

TEST_CASE("unimodular scrambles preserve the lattice volume") {
    IntMat u = random_unimodular(6, 3);
    CHECK(abs(determinant(u)) == 1);
    IntMat b = random_prime_hnf_basis(6, 30, 3);
    IntMat s = scrambled_basis(b, 17);
    CHECK(abs(determinant(s)) == determinant(b));
}

TEST_CASE("gaussian heuristic basics") {
    // For Z^n the covolume is 1, so GH = V_n(1)^(-1/n).
    for (unsigned n : {4u, 12u}) {
        double expect = std::exp(-log_ball_volume(n, 1.0) / n);
        CHECK(gaussian_heuristic(identity_matrix(n)) == doctest::Approx(expect).epsilon(1e-10));
    }
    // Scaling the basis scales the heuristic linearly.
    IntMat b2{{3, 0}, {0, 3}};
    CHECK(gaussian_heuristic(b2) ==
          doctest::Approx(3.0 * gaussian_heuristic(identity_matrix(2))).epsilon(1e-10));
    // Huge determinants stay finite through the log route.
    IntMat big = random_prime_hnf_basis(4, 500, 1);
    double gh = gaussian_heuristic(big);
    CHECK(std::isfinite(gh));
    CHECK(gh > 0.0);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(random_prime_hnf_basis(0, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_prime_hnf_basis(4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_unimodular(0, 1), std::invalid_argument);
}
