#include <doctest.h>

#include "strata/poisson.hpp"
#include "strata/parse.hpp"
#include "strata/rng.hpp"

using namespace strata;
using namespace strata::poisson;

TEST_CASE("standard bivector") {
    Bivector b10 = standard_bivector(1, 0);
    CHECK(b10.coeff("x1", "y1") == RationalFunc(1));
    Bivector b11 = standard_bivector(1, 1);
    CHECK(b11.coeff("x1", "y1") == RationalFunc(MPoly::variable("y1")));
    Bivector b22 = standard_bivector(2, 2);
    CHECK(b22.coeff("x1", "y1") == RationalFunc(MPoly::variable("y1")));
    CHECK(b22.coeff("x2", "y2") == RationalFunc(MPoly::variable("y2")));
    CHECK(b22.coeff("x1", "x2").is_zero());
    CHECK_THROWS_AS(standard_bivector(2, 3), math_error);
}

TEST_CASE("antisymmetry is normalized by pair order") {
    Bivector b({"p", "q"});
    b.add("q", "p", RationalFunc(MPoly::variable("p")));
    CHECK(b.coeff("p", "q") == -RationalFunc(MPoly::variable("p")));
    CHECK(b.coeff("q", "p") == RationalFunc(MPoly::variable("p")));
    CHECK_THROWS_AS(b.add("p", "p", RationalFunc(1)), math_error);
}

TEST_CASE("blowup substitution charts") {
    SUBCASE("k = 1 is the identity") {
        ChartSubst s = blowup_subst(2, 1);
        CHECK(s.fwd.at("y2") == RationalFunc(MPoly::variable("y2")));
        CHECK(s.verify_roundtrip());
    }
    SUBCASE("k = 2 rewrites y2 only") {
        ChartSubst s = blowup_subst(2, 2);
        CHECK(s.fwd.at("y2") ==
              RationalFunc(MPoly::variable("u2") * MPoly::variable("y1")));
        CHECK(s.fwd.at("y1") == RationalFunc(MPoly::variable("y1")));
        CHECK(s.verify_roundtrip());
    }
    SUBCASE("k = 3 rewrites y2 and y3") {
        ChartSubst s = blowup_subst(3, 3);
        CHECK(s.fwd.at("y2") ==
              RationalFunc(MPoly::variable("u2") * MPoly::variable("y1")));
        CHECK(s.fwd.at("y3") ==
              RationalFunc(MPoly::variable("u3") * MPoly::variable("y1")));
        CHECK(s.verify_roundtrip());
    }
    CHECK_THROWS_AS(blowup_subst(2, 0), math_error);
}

TEST_CASE("pullback examples") {
    SUBCASE("identity substitution") {
        Bivector bv = standard_bivector(2, 1);
        Bivector back = pullback(bv, blowup_subst(2, 1));
        CHECK(back == bv);
    }
    SUBCASE("the exhibited r = k = 2 chart") {
        Bivector got = pullback(standard_bivector(2, 2), blowup_subst(2, 2));
        Bivector want(got.coords());
        want.add("x1", "y1", RationalFunc(MPoly::variable("y1")));
        want.add("x1", "u2", -RationalFunc(MPoly::variable("u2")));
        want.add("x2", "u2", RationalFunc(MPoly::variable("u2")));
        CHECK(got == want);
    }
}

TEST_CASE("pole detection along a coordinate") {
    SUBCASE("pulled-back standard bivectors have no pole along y1") {
        for (int r = 1; r <= 3; ++r)
            for (int k = 1; k <= r; ++k)
                CHECK(check_no_poles(pullback(standard_bivector(r, k), blowup_subst(r, k)),
                                     "y1"));
    }
    SUBCASE("an artificial 1/y1 coefficient is a pole") {
        Bivector b({"x1", "u2", "y1"});
        b.add("x1", "u2", RationalFunc(MPoly(1), MPoly::variable("y1")));
        CHECK(!check_no_poles(b, "y1"));
    }
    SUBCASE("polynomial coefficients never have poles") {
        Bivector b({"x1", "y1"});
        b.add("x1", "y1", RationalFunc(parse_mpoly("y1^2 + x1")));
        CHECK(check_no_poles(b, "y1"));
    }
}

TEST_CASE("pullback respects composition and inversion") {
    // Triangular monomial substitutions: w1 = z1, w2 = z1^c * z2.
    auto make_subst = [](unsigned c) {
        ChartSubst s;
        s.old_coords = {"w1", "w2"};
        s.new_coords = {"w1", "w2"};
        MPoly z1 = MPoly::variable("w1"), z2 = MPoly::variable("w2");
        s.fwd.emplace("w1", RationalFunc(z1));
        s.fwd.emplace("w2", RationalFunc(z1.pow(c) * z2));
        s.inv.emplace("w1", RationalFunc(z1));
        s.inv.emplace("w2", RationalFunc(z2, z1.pow(c)));
        return s;
    };
    Rng rng(8);
    for (unsigned c1 = 1; c1 <= 2; ++c1)
        for (unsigned c2 = 1; c2 <= 2; ++c2) {
            ChartSubst s = make_subst(c1), t = make_subst(c2);
            REQUIRE(s.verify_roundtrip());
            Bivector bv({"w1", "w2"});
            bv.add("w1", "w2",
                   RationalFunc(MPoly::variable("w1").pow(rng.next() % 3) *
                                MPoly::variable("w2").pow(rng.next() % 2)));
            // Composite substitution t then s: old = s.fwd o t.fwd ... the
            // composed map sends w to s.fwd(w) evaluated in t's new coords.
            ChartSubst st;
            st.old_coords = st.new_coords = {"w1", "w2"};
            for (const auto& w : st.old_coords) {
                st.fwd.emplace(w, s.fwd.at(w).substitute(t.fwd));
                st.inv.emplace(w, t.inv.at(w).substitute(s.inv));
            }
            REQUIRE(st.verify_roundtrip());
            Bivector two_steps = pullback(pullback(bv, s), t);
            Bivector one_step = pullback(bv, st);
            CHECK(two_steps == one_step);
            // Inverse substitution returns the original bivector.
            ChartSubst sinv;
            sinv.old_coords = sinv.new_coords = {"w1", "w2"};
            sinv.fwd = s.inv;
            sinv.inv = s.fwd;
            CHECK(pullback(pullback(bv, s), sinv) == bv);
        }
}
