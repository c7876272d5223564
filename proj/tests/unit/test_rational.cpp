#include <doctest.h>

#include "semifree/rational.hpp"

using namespace semifree;

TEST_CASE("parse_rational accepts integers and p/q")
{
    CHECK(*parse_rational("7") == 7);
    CHECK(*parse_rational("-3/6") == make_rational(-1, 2));
    CHECK(*parse_rational("+4/2") == 2);
    CHECK_FALSE(parse_rational("1/0"));
    CHECK_FALSE(parse_rational("1/-2"));
    CHECK_FALSE(parse_rational("x"));
    CHECK_FALSE(parse_rational(""));
    CHECK_FALSE(parse_rational("1.5"));
}

TEST_CASE("to_string prints canonical p/q")
{
    CHECK(to_string(make_rational(6, 4)) == "3/2");
    CHECK(to_string(make_rational(-8, 4)) == "-2");
    CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("floor rounds toward negative infinity")
{
    CHECK(floor(make_rational(-1, 2)) == -1);
    CHECK(floor(make_rational(7, 2)) == 3);
    CHECK(floor(Rational(-4)) == -4);
}

TEST_CASE("zero denominators and non-integers are rejected")
{
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(to_long(make_rational(1, 3)), std::domain_error);
    CHECK(to_long(Rational(-12)) == -12);
}
