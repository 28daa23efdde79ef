#include "doctest.h"
#include "latsieve/rational.hpp"

#include <cmath>

using namespace latsieve;

TEST_CASE("floor, ceil and round of rationals") {
    CHECK(floor_rat(Rat(7, 2)) == 3);
    CHECK(floor_rat(Rat(-7, 2)) == -4);
    CHECK(floor_rat(Rat(6, 3)) == 2);
    CHECK(ceil_rat(Rat(7, 2)) == 4);
    CHECK(ceil_rat(Rat(-7, 2)) == -3);
    CHECK(ceil_rat(Rat(4)) == 4);

    CHECK(round_rat(Rat(1, 3)) == 0);
    CHECK(round_rat(Rat(2, 3)) == 1);
    CHECK(round_rat(Rat(-1, 3)) == 0);
    CHECK(round_rat(Rat(-2, 3)) == -1);
    // halves go towards +infinity
    CHECK(round_rat(Rat(1, 2)) == 1);
    CHECK(round_rat(Rat(-1, 2)) == 0);
    CHECK(round_rat(Rat(3, 2)) == 2);
    CHECK(round_rat(Rat(-3, 2)) == -1);
}

TEST_CASE("round_rat always lands within 1/2") {
    for (int num = -40; num <= 40; ++num)
        for (int den = 1; den <= 9; ++den) {
            Rat q(num, den);
            Rat err = q - Rat(round_rat(q));
            CHECK(2 * abs(err.get_num()) <= err.get_den());
        }
}

TEST_CASE("rat_from_string accepts fractions, decimals and integers") {
    CHECK(rat_from_string("3/4") == Rat(3, 4));
    CHECK(rat_from_string("-3/4") == Rat(-3, 4));
    CHECK(rat_from_string("0.99") == Rat(99, 100));
    CHECK(rat_from_string("-2.5") == Rat(-5, 2));
    CHECK(rat_from_string("7") == Rat(7));
    CHECK(rat_from_string("1.000") == Rat(1));
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("."), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("abc"), std::exception);
}

TEST_CASE("log of huge integers and rationals") {
    Int big = Int(1) << 1000;
    CHECK(log_int(big) == doctest::Approx(1000.0 * std::log(2.0)).epsilon(1e-12));
    Rat q(Int(1) << 800, Int(1) << 300);
    CHECK(log_rat(q) == doctest::Approx(500.0 * std::log(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(log_int(Int(0)), std::domain_error);
    CHECK_THROWS_AS(log_rat(Rat(-1)), std::domain_error);
}
