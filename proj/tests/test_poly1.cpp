#include <doctest.h>

#include "strata/parse.hpp"
#include "strata/poly1.hpp"
#include "strata/rng.hpp"

using namespace strata;

namespace {
UPoly up(const char* s) {
    return parse_upoly(s, "x");
}
UPoly random_upoly(Rng& rng, int maxdeg, const Field& f) {
    std::vector<FieldElem> c;
    int d = static_cast<int>(rng.uniform(0, maxdeg));
    for (int i = 0; i <= d; ++i) c.push_back(rng.small(f));
    return UPoly("x", std::move(c));
}
}  // namespace

TEST_CASE("divrem examples") {
    SUBCASE("exact divisor") {
        auto [q, r] = divrem(up("x^2"), up("x"));
        CHECK(q == up("x"));
        CHECK(r.is_zero());
    }
    SUBCASE("degree of dividend below divisor") {
        auto [q, r] = divrem(up("x + 1"), up("x^2"));
        CHECK(q.is_zero());
        CHECK(r == up("x + 1"));
    }
    SUBCASE("verified by multiplication") {
        auto u = up("x^2"), v = up("x + 1");
        auto [q, r] = divrem(u, v);
        CHECK(q == up("x - 1"));
        CHECK(r == up("1"));
        CHECK(q * v + r == u);
    }
    CHECK_THROWS_AS(divrem(up("x"), UPoly("x")), math_error);
}

TEST_CASE("divrem identity on seeded random pairs") {
    Rng rng(42);
    Field f = Field::rationals();
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        UPoly u = random_upoly(rng, 8, f), v = random_upoly(rng, 8, f);
        if (v.is_zero()) continue;
        auto [q, r] = divrem(u, v);
        CHECK(q * v + r == u);
        if (!r.is_zero()) CHECK(*r.degree() < *v.degree());
        ++checked;
    }
    CHECK(checked > 250);
}

TEST_CASE("gcd examples") {
    CHECK(gcd_list<FieldElem>({up("x^2"), up("x")}) == up("x"));
    // (x^2-1, x-1): factor check (x-1)(x+1).
    CHECK(up("x - 1") * up("x + 1") == up("x^2 - 1"));
    CHECK(gcd_list<FieldElem>({up("x^2 - 1"), up("x - 1")}) == up("x - 1"));
    // (x^2+1, x+1): remainder sequence x^2+1 = (x-1)(x+1) + 2.
    CHECK(up("x - 1") * up("x + 1") + up("2") == up("x^2 + 1"));
    CHECK(gcd_list<FieldElem>({up("x^2 + 1"), up("x + 1")}) == up("1"));
    CHECK_THROWS_AS(gcd_list<FieldElem>({UPoly("x"), UPoly("x")}), math_error);
}

TEST_CASE("gcd divides inputs and is a combination") {
    Rng rng(7);
    Field f = Field::rationals();
    for (int i = 0; i < 120; ++i) {
        UPoly u = random_upoly(rng, 6, f), v = random_upoly(rng, 6, f);
        if (u.is_zero() && v.is_zero()) continue;
        UPoly g = gcd_list<FieldElem>({u, v});
        if (!u.is_zero()) CHECK(divrem(u, g).second.is_zero());
        if (!v.is_zero()) CHECK(divrem(v, g).second.is_zero());
        auto e = extended_gcd(u, v);
        CHECK(e.g == g);
        CHECK(e.s * u + e.t * v == g);
    }
}

TEST_CASE("zero polynomial has no degree") {
    UPoly z("x");
    CHECK(!z.degree().has_value());
    CHECK(up("3").degree() == 0);
    CHECK_THROWS_AS(z.lead(), math_error);
}
