#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tight/rational.hpp"

using namespace tight;

TEST_CASE("string form is p/q and round-trips")
{
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational(to_string(Rational(5, 12))) == Rational(5, 12));
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("comparisons against plain integers")
{
    CHECK(Rational(0) == 0);
    CHECK(0 == Rational(0));
    CHECK(Rational(4, 2) == 2);
    CHECK(Rational(1, 2) != 0);
    CHECK(std::int64_t{3} == Rational(3));
}

TEST_CASE("inverse and rank")
{
    const std::vector<Vec> c2{{Rational(2), Rational(-2)}, {Rational(-1), Rational(2)}};
    const auto inv = inverse(c2);
    CHECK(inv[0][0] == 1);
    CHECK(inv[0][1] == 1);
    CHECK(inv[1][0] == Rational(1, 2));
    CHECK(inv[1][1] == 1);
    CHECK_THROWS_AS(inverse({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}), std::domain_error);
    CHECK(matrix_rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
    CHECK(matrix_rank({{Rational(1), Rational(0)}, {Rational(0), Rational(3)}}) == 2);
    CHECK(is_integer(Rational(6, 3)));
    CHECK_FALSE(is_integer(Rational(1, 3)));
}
