#include "doctest.h"
#include "latsieve/enumeration.hpp"
#include "latsieve/sieve.hpp"
#include "oracles.hpp"

using namespace latsieve;
using latsieve::testing::random_reduced_basis;

TEST_CASE("list sieve finds the exact minimum on seeded random lattices") {
    for (size_t dim : {8u, 10u, 12u}) {
        for (uint64_t seed : {1u, 2u}) {
            IntMat b = random_reduced_basis(dim, static_cast<unsigned>(10 * dim), seed);
            Int expect = shortest_norm_sq(b);
            SieveParams p;
            p.seed = 42 + seed;
            SieveResult r = sieve_shortest_list(b, p);
            CHECK(r.norm_sq == expect);
            CHECK(norm_sq(r.vector) == r.norm_sq);
            CHECK(r.stats.passes > 0);
            CHECK(r.stats.reductions > 0);
            CHECK(r.stats.peak_list_size >= r.stats.final_list_size);
        }
    }
}

TEST_CASE("pair sieve finds the exact minimum on seeded random lattices") {
    for (size_t dim : {8u, 10u}) {
        IntMat b = random_reduced_basis(dim, static_cast<unsigned>(10 * dim), 3);
        Int expect = shortest_norm_sq(b);
        SieveParams p;
        p.seed = 7;
        SieveResult r = sieve_shortest_pairs(b, p);
        CHECK(r.norm_sq == expect);
        CHECK(norm_sq(r.vector) == r.norm_sq);
        CHECK(r.stats.passes > 0);
    }
}

TEST_CASE("sieve results are deterministic for a fixed seed") {
    IntMat b = random_reduced_basis(9, 90, 5);
    SieveParams p;
    p.seed = 99;
    p.samples = 3000;
    SieveResult r1 = sieve_shortest_list(b, p);
    SieveResult r2 = sieve_shortest_list(b, p);
    CHECK(r1.vector == r2.vector);
    CHECK(r1.stats.passes == r2.stats.passes);
    CHECK(r1.stats.reductions == r2.stats.reductions);
}

TEST_CASE("sieve on an orthogonal basis returns a basis vector") {
    IntMat id = identity_matrix(6);
    SieveParams p;
    p.samples = 2000;
    SieveResult r = sieve_shortest_list(id, p);
    CHECK(r.norm_sq == 1);
}

TEST_CASE("parameter validation") {
    IntMat b = identity_matrix(4);
    SieveParams p;
    p.gamma = 1.0;
    CHECK_THROWS_AS(sieve_shortest_list(b, p), std::invalid_argument);
    p = {};
    p.pair_gamma = 0.0;
    CHECK_THROWS_AS(sieve_shortest_pairs(b, p), std::invalid_argument);
    p = {};
    p.xi = -1.0;
    CHECK_THROWS_AS(sieve_shortest_pairs(b, p), std::invalid_argument);
    p = {};
    p.max_passes = 0;
    CHECK_THROWS_AS(sieve_shortest_list(b, p), std::invalid_argument);
}

TEST_CASE("sieve statistics are coherent") {
    IntMat b = random_reduced_basis(10, 100, 8);
    SieveParams p;
    p.seed = 4;
    SieveResult r = sieve_shortest_list(b, p);
    CHECK(r.stats.samples > 0);
    CHECK(r.stats.centers_per_pass.size() == static_cast<size_t>(r.stats.passes));
    CHECK(r.stats.distance_evals >= r.stats.reductions);
    CHECK(r.norm_sq > 0);
}
