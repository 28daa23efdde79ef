#include "doctest.h"
#include "latsieve/volume.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace latsieve;
using latsieve::testing::quadrature_intersection_volume;

TEST_CASE("ball volumes match the closed forms") {
    CHECK(ball_volume(1, 2.0) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(ball_volume(2, 1.5) == doctest::Approx(M_PI * 2.25).epsilon(1e-12));
    CHECK(ball_volume(3, 1.0) == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-12));
    CHECK(ball_volume(4, 1.0) == doctest::Approx(M_PI * M_PI / 2.0).epsilon(1e-12));
    CHECK_THROWS_AS(ball_volume(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ball_volume(3, -1.0), std::invalid_argument);
}

TEST_CASE("incomplete beta sanity") {
    CHECK(regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
    CHECK(regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0);
    // I_x(1,1) = x
    CHECK(regularized_incomplete_beta(1.0, 1.0, 0.37) == doctest::Approx(0.37).epsilon(1e-12));
    // I_x(a,b) = 1 - I_{1-x}(b,a)
    double v1 = regularized_incomplete_beta(3.5, 1.25, 0.6);
    double v2 = regularized_incomplete_beta(1.25, 3.5, 0.4);
    CHECK(v1 == doctest::Approx(1.0 - v2).epsilon(1e-12));
    CHECK_THROWS_AS(regularized_incomplete_beta(-1.0, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(regularized_incomplete_beta(1.0, 1.0, 1.5), std::invalid_argument);
}

TEST_CASE("cap volume matches the 3-dimensional closed form") {
    double R = 1.7;
    for (double h : {0.1, 0.5, 1.0, 1.5, 2.3, 3.3}) {
        double expect = M_PI * h * h * (3.0 * R - h) / 3.0;
        CHECK(spherical_cap_volume(3, R, h) == doctest::Approx(expect).epsilon(1e-10));
    }
    CHECK(spherical_cap_volume(5, 1.0, 0.0) == 0.0);
    CHECK(spherical_cap_volume(5, 1.0, 2.0) == doctest::Approx(ball_volume(5, 1.0)).epsilon(1e-12));
    CHECK(spherical_cap_volume(5, 1.0, 1.0) ==
          doctest::Approx(0.5 * ball_volume(5, 1.0)).epsilon(1e-12));
}

TEST_CASE("two-ball intersection agrees with quadrature") {
    struct Case {
        unsigned n;
        double r1, r2, d;
    };
    for (const Case& c : {Case{2, 1.0, 1.0, 1.0}, Case{3, 1.0, 1.0, 0.5}, Case{4, 2.0, 1.0, 1.8},
                          Case{6, 1.0, 0.9, 1.2}, Case{9, 1.5, 1.5, 1.5}, Case{12, 1.0, 1.0, 0.3}}) {
        double exact = ball_intersection_volume(c.n, c.r1, c.r2, c.d);
        double quad = quadrature_intersection_volume(c.n, c.r1, c.r2, c.d);
        CHECK(exact == doctest::Approx(quad).epsilon(1e-9));
    }
}

TEST_CASE("intersection degenerate cases") {
    CHECK(ball_intersection_volume(4, 1.0, 1.0, 2.0) == 0.0);
    CHECK(ball_intersection_volume(4, 1.0, 1.0, 5.0) == 0.0);
    CHECK(ball_intersection_volume(4, 3.0, 1.0, 1.0) ==
          doctest::Approx(ball_volume(4, 1.0)).epsilon(1e-12));
    // symmetry in the two radii
    CHECK(ball_intersection_volume(5, 1.2, 0.7, 1.0) ==
          doctest::Approx(ball_intersection_volume(5, 0.7, 1.2, 1.0)).epsilon(1e-12));
}

TEST_CASE("sieve overlap ratio and the 4/3 law") {
    // with gamma = 1 the overlap fraction decays like (3/4)^(n/2), so the
    // expected center count grows like (4/3)^(n/2)
    double rate = std::log2(expected_center_count(400, 1.0)) / 400.0;
    CHECK(rate == doctest::Approx(0.5 * std::log2(4.0 / 3.0)).epsilon(0.08));
    // monotone: smaller gamma, smaller overlap
    CHECK(intersection_ratio(10, 0.8) < intersection_ratio(10, 0.9));
    CHECK(intersection_ratio(10, 0.9) < intersection_ratio(10, 1.0));
}

TEST_CASE("monte carlo ball volume lands within four standard errors") {
    Rng rng(2024);
    for (unsigned n : {2u, 4u, 8u}) {
        McEstimate e = mc_ball_volume(n, 1.0, 40000, rng);
        double exact = ball_volume(n, 1.0);
        CHECK(e.std_error > 0.0);
        CHECK(std::fabs(e.value - exact) <= 4.0 * e.std_error);
    }
}

TEST_CASE("monte carlo intersection volume lands within four standard errors") {
    Rng rng(99);
    for (unsigned n : {3u, 5u}) {
        McEstimate e = mc_ball_intersection_volume(n, 1.0, 1.2, 0.9, 60000, rng);
        double exact = ball_intersection_volume(n, 1.0, 1.2, 0.9);
        CHECK(e.std_error > 0.0);
        CHECK(std::fabs(e.value - exact) <= 4.0 * e.std_error);
    }
}

TEST_CASE("monte carlo overlap ratio matches the exact ratio") {
    Rng rng(123);
    McEstimate e = mc_intersection_ratio(6, 0.9, 50000, rng);
    double exact = intersection_ratio(6, 0.9);
    CHECK(std::fabs(e.value - exact) <= 4.0 * e.std_error);
}
