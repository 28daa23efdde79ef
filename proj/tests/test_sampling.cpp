#include "doctest.h"
#include "latsieve/sampling.hpp"
#include "latsieve/lll.hpp"
#include "latsieve/random_lattice.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace latsieve;

namespace {

// Exact membership check: solve x * B = v over the rationals and verify
// the coordinates are integers.
bool in_lattice(const IntMat& basis, const Vec64& v) {
    RatMat inv = rational_inverse(basis);
    size_t n = basis.size();
    for (size_t i = 0; i < n; ++i) {
        Rat c = 0;
        for (size_t j = 0; j < n; ++j) c += Rat(Int(static_cast<long>(v[j]))) * inv[j][i];
        if (c.get_den() != 1) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("ball sampling stays inside and fills the ball") {
    Rng rng(42);
    double r = 2.5;
    double mean = 0.0;
    const int k = 2000;
    for (int i = 0; i < k; ++i) {
        auto v = sample_ball(8, r, rng);
        double nrm = 0.0;
        for (double c : v) nrm += c * c;
        nrm = std::sqrt(nrm);
        CHECK(nrm <= r + 1e-12);
        mean += nrm / k;
    }
    // E[||x||] = r * n/(n+1) = r * 8/9 for uniform in the 8-ball
    CHECK(mean == doctest::Approx(r * 8.0 / 9.0).epsilon(0.02));
}

TEST_CASE("uniform01 and gauss are deterministic per seed") {
    Rng a(7), b(7);
    for (int i = 0; i < 10; ++i) {
        CHECK(uniform01(a) == uniform01(b));
    }
    Rng c(7), d(8);
    bool differ = false;
    for (int i = 0; i < 10; ++i) differ = differ || (gauss(c) != gauss(d));
    CHECK(differ);
}

TEST_CASE("context validates its input") {
    IntMat rect{{1, 2, 3}, {4, 5, 6}};
    IntMat dep{{1, 2}, {2, 4}};
    IntMat big{{Int(1) << 30, 0}, {0, 1}};
    CHECK_THROWS_AS((void)SieveContext(rect), std::invalid_argument);
    CHECK_THROWS_AS((void)SieveContext(dep), std::invalid_argument);
    CHECK_THROWS_AS((void)SieveContext(big), std::domain_error);
}

TEST_CASE("gaussian lattice sampler emits genuine lattice vectors") {
    IntMat b = latsieve::testing::random_reduced_basis(6, 30, 3);
    SieveContext ctx(b);
    Rng rng(11);
    double width = ctx.max_bstar_norm();
    int nonzero = 0;
    for (int i = 0; i < 50; ++i) {
        Vec64 v = sample_lattice_gaussian(ctx, width, rng);
        CHECK(in_lattice(b, v));
        if (norm_sq64(v) != 0) ++nonzero;
    }
    CHECK(nonzero > 20);
    CHECK_THROWS_AS(sample_lattice_gaussian(ctx, 0.0, rng), std::invalid_argument);
}

TEST_CASE("perturbation pairs: noise in the ball, offset in the lattice") {
    IntMat b = latsieve::testing::random_reduced_basis(5, 25, 9);
    SieveContext ctx(b);
    Rng rng(13);
    double r = 6.0;
    for (int i = 0; i < 50; ++i) {
        PerturbedPair p = sample_perturbed_pair(ctx, r, rng);
        double xn = 0.0;
        for (double c : p.x) xn += c * c;
        CHECK(std::sqrt(xn) <= r + 1e-12);
        CHECK(in_lattice(b, p.ell));
        // x + ell lies in the fundamental parallelepiped: coordinates in [0,1)
        for (size_t ii = 0; ii < 5; ++ii) {
            double coord = 0.0;
            for (size_t j = 0; j < 5; ++j)
                coord += (p.x[j] + static_cast<double>(p.ell[j])) * ctx.inverse_d()[j][ii];
            CHECK(coord >= -1e-9);
            CHECK(coord < 1.0 + 1e-9);
        }
    }
}

TEST_CASE("dot64 and norm_sq64") {
    Vec64 a{3, -4, 0}, b{1, 1, 7};
    CHECK(dot64(a, b) == -1);
    CHECK(norm_sq64(a) == 25);
    Vec64 huge{int64_t(3) << 30, int64_t(3) << 30};
    CHECK_THROWS_AS(norm_sq64(huge), std::domain_error);
}
