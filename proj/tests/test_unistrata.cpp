#include <doctest.h>

#include "strata/parse.hpp"
#include "strata/unistrata.hpp"

using namespace strata;
using namespace strata::uni;

namespace {
UPoly up(const char* s) {
    return parse_upoly(s, "x");
}
StratPoint point_from(const Shape& shape, const std::vector<const char*>& hs,
                      const std::vector<const char*>& fs) {
    StratPoint pt = StratPoint::origin(shape);
    for (int i = 0; i < shape.n(); ++i) {
        UPoly h = up(hs[i]), f = up(fs[i]);
        for (int j = 0; j < shape.m[i]; ++j) {
            pt.b[i][j] = h.coeff(j);
            pt.a[i][j] = f.coeff(j);
        }
    }
    return pt;
}
}  // namespace

TEST_CASE("assemble examples") {
    SUBCASE("n = 1 products are trivial") {
        auto t = assemble(point_from(Shape({2}), {"x^2"}, {"x + 1"}));
        CHECK(t.h == up("x^2"));
        CHECK(t.p[0] == up("x + 1"));
    }
    SUBCASE("origin of shape (2,1)") {
        auto t = assemble(StratPoint::origin(Shape({2, 1})));
        CHECK(t.h == up("x^3"));
        CHECK(t.p[0].is_zero());
        CHECK(t.p[1].is_zero());
    }
    SUBCASE("direct multiplication") {
        auto t = assemble(point_from(Shape({1, 1}), {"x", "x - 1"}, {"1", "2"}));
        CHECK(t.h == up("x^2 - x"));
        CHECK(t.p[0] == up("x - 1"));
        CHECK(t.p[1] == up("2*x"));
    }
}

TEST_CASE("colength examples") {
    CHECK(colength(assemble(StratPoint::origin(Shape({2, 1})))) == 3);
    CHECK(colength(assemble(point_from(Shape({2}), {"x^2"}, {"1"}))) == 0);
    // gcd(x^2 - x, x) = x.
    auto t = assemble(point_from(Shape({1, 1}), {"x", "x - 1"}, {"0", "1"}));
    CHECK(t.p[1] == up("x"));
    CHECK(colength(t) == 1);
}

TEST_CASE("colength oracle examples") {
    CHECK(colength_oracle(assemble(StratPoint::origin(Shape({2, 1})))) == 3);
    CHECK(colength_oracle(assemble(point_from(Shape({2}), {"x^2"}, {"x"}))) == 1);
    CHECK(colength_oracle(assemble(point_from(Shape({2}), {"x^2"}, {"1"}))) == 0);
}

TEST_CASE("stratum equations") {
    SUBCASE("k = 0 is the whole space") {
        CHECK(stratum_equations(Shape({2}), 0).empty());
    }
    SUBCASE("k out of range") {
        CHECK_THROWS_AS(stratum_equations(Shape({2}), 3), math_error);
    }
    SUBCASE("k = m matches the vanishing of the a_{i,j}") {
        // Size-one minors evaluate to zero exactly on V(a).
        Shape s({1, 1});
        auto eqs = stratum_equations(s, 2);
        REQUIRE(!eqs.empty());
        std::map<std::string, FieldElem> on{{"a1_0", FieldElem(0)}, {"a2_0", FieldElem(0)},
                                            {"b1_0", FieldElem(3)}, {"b2_0", FieldElem(-1)}};
        std::map<std::string, FieldElem> off{{"a1_0", FieldElem(1)}, {"a2_0", FieldElem(0)},
                                             {"b1_0", FieldElem(3)}, {"b2_0", FieldElem(-1)}};
        bool all_zero_on = true, all_zero_off = true;
        for (const auto& e : eqs) {
            if (!e.eval(on).is_zero()) all_zero_on = false;
            if (!e.eval(off).is_zero()) all_zero_off = false;
        }
        CHECK(all_zero_on);
        CHECK(!all_zero_off);
    }
    SUBCASE("shape (2), k = 1: minors vanish at a sampled colength-1 point") {
        Rng rng(5);
        Shape s({2});
        StratPoint pt = construct_stratum_point(s, 1, rng);
        auto eqs = stratum_equations(s, 1);
        std::map<std::string, FieldElem> vals;
        for (int j = 0; j < 2; ++j) {
            vals[a_name(1, j)] = pt.a[0][j];
            vals[b_name(1, j)] = pt.b[0][j];
        }
        for (const auto& e : eqs) CHECK(e.eval(vals).is_zero());
    }
}

TEST_CASE("construct_stratum_point hits the requested colength") {
    Rng rng(23);
    for (int k = 0; k <= 2; ++k) {
        StratPoint pt = construct_stratum_point(Shape({2, 1}), static_cast<std::size_t>(k), rng);
        CHECK(colength(assemble(pt)) == static_cast<std::size_t>(k));
    }
    // k = m with shape (m) forces f_1 = 0.
    StratPoint full = construct_stratum_point(Shape({2}), 2, rng);
    CHECK(full.a[0][0].is_zero());
    CHECK(full.a[0][1].is_zero());
    CHECK_THROWS_AS(construct_stratum_point(Shape({2, 1}), 3, rng), math_error);
}

TEST_CASE("construct_stratum_point can pin the common divisor at the origin") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        StratPoint pt = construct_stratum_point(Shape({3}), 1, rng, Field::rationals(),
                                                /*force_root_at_origin=*/true);
        auto t = assemble(pt);
        std::vector<UPoly> gens = t.p;
        gens.push_back(t.h);
        UPoly g = gcd_list(gens);
        CHECK(*g.degree() == 1);
        CHECK(g.coeff(0).is_zero());  // gcd = x, the divisor vanishes at 0
    }
}

TEST_CASE("strat point JSON round trip") {
    Rng rng(3);
    StratPoint pt = construct_stratum_point(Shape({2, 2}), 1, rng);
    pt.b[0][0] = parse_field_elem("3/2", Field::rationals());
    auto j = to_json(pt);
    CHECK(j["b"][0][0] == "3/2");
    StratPoint back = strat_point_from_json(j);
    CHECK(back.b[0][0] == pt.b[0][0]);
    CHECK(colength(assemble(back)) == colength(assemble(pt)));
}
