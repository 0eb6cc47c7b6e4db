#include <doctest.h>

#include "strata/parse.hpp"

using namespace strata;

TEST_CASE("grammar round trip") {
    MPoly p = parse_mpoly("x^2*y - 3/2*x + 1");
    CHECK(p.str() == "x^2*y - 3/2*x + 1");
    CHECK(parse_mpoly(p.str()) == p);
}

TEST_CASE("coefficients as integers or p/q") {
    CHECK(parse_mpoly("5") == MPoly(5));
    CHECK(parse_mpoly("2/4*x") == parse_mpoly("1/2*x"));
    CHECK(parse_mpoly("- x + x").is_zero());
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse_mpoly("x ++ y"), parse_error);
    try {
        parse_mpoly("x ++ y", Field::rationals(), {}, 1);
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.line == 1);
        CHECK(e.column >= 4);
    }
    CHECK_THROWS_AS(parse_mpoly(""), parse_error);
    CHECK_THROWS_AS(parse_mpoly("3*"), parse_error);
    CHECK_THROWS_AS(parse_mpoly("x^"), parse_error);
    CHECK_THROWS_AS(parse_mpoly("1/0"), parse_error);
}

TEST_CASE("univariate parsing rejects extra variables") {
    UPoly u = parse_upoly("x^3 - 2*x + 1/3", "x");
    CHECK(u.degree() == 3);
    CHECK(u.coeff(0) == parse_field_elem("1/3", Field::rationals()));
    CHECK_THROWS_AS(parse_upoly("x + y", "x"), math_error);
}

TEST_CASE("prime field parsing") {
    Field f5 = Field::prime(5);
    MPoly p = parse_mpoly("7*x + 1/2", f5);
    CHECK(p == parse_mpoly("2*x + 3", f5));
}
