#include <doctest.h>

#include "strata/mpoly.hpp"
#include "strata/parse.hpp"
#include "strata/rng.hpp"

using namespace strata;

namespace {
MPoly mp(const char* s, const std::vector<std::string>& vars = {}) {
    return parse_mpoly(s, Field::rationals(), vars);
}
MPoly random_mpoly(Rng& rng, const std::vector<std::string>& vars) {
    MPoly acc;
    for (int t = 0; t < 4; ++t) {
        MPoly term(rng.small(Field::rationals()));
        for (const auto& v : vars)
            term = term * MPoly::variable(v).pow(static_cast<unsigned>(rng.uniform(0, 2)));
        acc += term;
    }
    return acc.with_vars(vars);
}
}  // namespace

TEST_CASE("diff examples") {
    CHECK(mp("x^2*y").diff("x") == mp("2*x*y"));
    CHECK(mp("x^2", {"x", "y"}).diff("y").is_zero());
    CHECK(mp("x^3 + 3*x*y").diff("x") == mp("3*x^2 + 3*y"));
    CHECK_THROWS_AS(mp("x^2").diff("z"), math_error);
}

TEST_CASE("Leibniz identity on random pairs") {
    Rng rng(11);
    std::vector<std::string> vars{"x", "y"};
    for (int i = 0; i < 60; ++i) {
        MPoly p = random_mpoly(rng, vars), q = random_mpoly(rng, vars);
        CHECK((p * q).diff("x") == p.diff("x") * q + q.diff("x") * p);
    }
}

TEST_CASE("substitute examples") {
    SUBCASE("x -> u*t in x^2") {
        std::map<std::string, RationalFunc> sub{
            {"x", RationalFunc(mp("u") * mp("t"))}};
        CHECK(mp("x^2").substitute(sub) == RationalFunc(mp("u^2*t^2")));
    }
    SUBCASE("identity map") {
        MPoly p = mp("x^2*y - 3/2*x + 1");
        std::map<std::string, RationalFunc> sub{{"x", RationalFunc(MPoly::variable("x"))},
                                                {"y", RationalFunc(MPoly::variable("y"))}};
        CHECK(p.substitute(sub) == RationalFunc(p));
    }
    SUBCASE("y -> 1/t in y^2 + y, common-denominator check") {
        std::map<std::string, RationalFunc> sub{
            {"y", RationalFunc(MPoly(1), MPoly::variable("t"))}};
        RationalFunc got = mp("y^2 + y").substitute(sub);
        CHECK(got == RationalFunc(mp("1 + t"), mp("t^2")));
    }
    CHECK_THROWS_AS(mp("x*y").substitute({{"x", RationalFunc(MPoly(1))}}), math_error);
}

TEST_CASE("rational functions reduce by content and compare by cross-multiplication") {
    RationalFunc a(mp("x^2*y"), mp("x*y^2"));
    CHECK(a == RationalFunc(mp("x"), mp("y")));
    CHECK(a.num() == mp("x"));
    RationalFunc b = RationalFunc(mp("x"), mp("y")) + RationalFunc(mp("1"), mp("y"));
    CHECK(b == RationalFunc(mp("x + 1"), mp("y")));
    CHECK_THROWS_AS(RationalFunc(mp("1"), MPoly()), math_error);
    CHECK_THROWS_AS(RationalFunc(mp("1")) / RationalFunc(), math_error);
    // Denominator evaluation guard.
    RationalFunc c(mp("1"), mp("x"));
    CHECK_THROWS_AS(c.eval({{"x", FieldElem(0)}}), math_error);
    CHECK(c.eval({{"x", FieldElem(2)}}) == parse_field_elem("1/2", Field::rationals()));
}

TEST_CASE("no stored zero coefficients") {
    MPoly p = mp("x + y") - mp("y");
    CHECK(p.terms().size() == 1);
    CHECK((mp("x") - mp("x")).is_zero());
}
