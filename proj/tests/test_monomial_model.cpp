#include <doctest.h>

#include "strata/monomial_model.hpp"
#include "strata/parse.hpp"

using namespace strata;
using namespace strata::model;

namespace {
MPoly mp(const char* s) {
    return parse_mpoly(s, Field::rationals(), {"x", "y"});
}
}  // namespace

TEST_CASE("generator formula") {
    SUBCASE("n = 1") {
        auto g = generators(MonomialIdealSpec({2}, {3}));
        REQUIRE(g.size() == 2);
        CHECK(g[0] == mp("x^3"));
        CHECK(g[1] == mp("y^2"));
    }
    SUBCASE("n = 2 square") {
        auto g = generators(MonomialIdealSpec({1, 1}, {1, 1}));
        REQUIRE(g.size() == 3);
        CHECK(g[0] == mp("x^2"));
        CHECK(g[1] == mp("x*y"));
        CHECK(g[2] == mp("y^2"));
    }
    SUBCASE("zero entries allowed") {
        auto g = generators(MonomialIdealSpec({0, 2}, {1, 1}));
        REQUIRE(g.size() == 3);
        CHECK(g[0] == mp("x^2"));
        CHECK(g[1] == mp("x"));
        CHECK(g[2] == mp("y^2"));
    }
    CHECK_THROWS_AS(MonomialIdealSpec({0}, {3}), math_error);
}

TEST_CASE("colength formula vs staircase") {
    CHECK(colength_L(MonomialIdealSpec({2}, {3})) == 6);
    CHECK(colength_L(MonomialIdealSpec({1, 1}, {1, 1})) == 3);
    CHECK(colength_L(MonomialIdealSpec({0, 2}, {1, 1})) == 2);
    CHECK(staircase_colength({mp("x"), mp("y")}) == 1);
    CHECK(staircase_colength({mp("x^2"), mp("x*y"), mp("y^2")}) == 3);
    CHECK(staircase_colength({mp("x^3"), mp("y^2")}) == 6);
    CHECK_THROWS_AS(staircase_colength({mp("x^2")}), math_error);
    CHECK_THROWS_AS(staircase_colength({mp("x + y")}), math_error);
}

TEST_CASE("generators are signed maximal minors") {
    for (auto [s, t] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
             {{2}, {3}}, {{1, 1}, {1, 1}}, {{0, 2}, {1, 1}}, {{1, 2, 1}, {2, 1, 1}}}) {
        MonomialIdealSpec spec(s, t);
        auto g = generators(spec);
        for (int i = 0; i <= spec.n(); ++i) {
            MPoly d = deleted_minor(spec, i);
            CHECK((d == g[i] || d == -g[i]));
        }
    }
}

TEST_CASE("Fogarty dimensions from the resolution") {
    auto d1 = tangent_ext_dims(MonomialIdealSpec({1}, {1}));
    CHECK(d1.first == 2);
    CHECK(d1.second == 1);
    auto d2 = tangent_ext_dims(MonomialIdealSpec({1, 1}, {1, 1}));
    CHECK(d2.first == 6);
    CHECK(d2.second == 3);
    auto d3 = tangent_ext_dims(MonomialIdealSpec({2}, {3}));
    CHECK(d3.first == 12);
    CHECK(d3.second == 6);
    CHECK_THROWS_AS(tangent_ext_dims(MonomialIdealSpec({3}, {3}), 5), math_error);
}

TEST_CASE("deformation of the determinantal matrix") {
    SUBCASE("zero parameters reproduce the monomial ideal") {
        MonomialIdealSpec spec({1, 1}, {1, 1});
        bi::BiIdeal I = deform(spec, DeformParams::zero(spec));
        CHECK(I.equals(bi::BiIdeal(generators(spec))));
    }
    SUBCASE("n=1 point pushed off the axis") {
        MonomialIdealSpec spec({1}, {1});
        auto p = DeformParams::zero(spec);
        p.a[0][0] = FieldElem(5);
        bi::BiIdeal I = deform(spec, p);
        CHECK(I.colength() == 1);
        CHECK(bi::incidence_colength(I) == 0);
    }
    SUBCASE("colength preserved under a diagonal deformation") {
        MonomialIdealSpec spec({1, 1}, {1, 1});
        auto p = DeformParams::zero(spec);
        p.a[0][0] = FieldElem(1);
        CHECK(deform(spec, p).colength() == 3);
    }
}

TEST_CASE("restriction to the x-axis") {
    MonomialIdealSpec spec({1, 1}, {1, 1});
    SUBCASE("zero parameters give the origin of shape (t.)") {
        auto t = restrict_x_axis(spec, DeformParams::zero(spec));
        CHECK(uni::colength(t) == 2);  // colength t = sum t_i
    }
    SUBCASE("epsilon deformation has colength zero") {
        MonomialIdealSpec pt({1}, {1});
        auto p = DeformParams::zero(pt);
        p.a[0][0] = FieldElem(3);
        auto t = restrict_x_axis(pt, p);
        CHECK(uni::colength(t) == 0);
    }
    SUBCASE("agrees with bivariate elimination") {
        Rng rng(77);
        for (int i = 0; i < 25; ++i) {
            auto p = DeformParams::sample(spec, rng);
            bi::BiIdeal I = deform(spec, p);
            std::vector<MPoly> gens = I.gens();
            gens.push_back(MPoly::variable("y"));
            auto c = bi::BiIdeal(std::move(gens)).colength();
            REQUIRE(c.has_value());
            CHECK(*c == static_cast<long>(uni::colength(restrict_x_axis(spec, p))));
        }
    }
    SUBCASE("zero t blocks are dropped, empty x-direction is rejected upfront") {
        MonomialIdealSpec z({1, 1}, {2, 0});
        auto p = DeformParams::zero(z);
        auto pt = restrict_x_axis_point(z, p);
        CHECK(pt.shape.m == std::vector<int>{2});
        // sum t = 0 already violates cosupport at the origin.
        CHECK_THROWS_AS(MonomialIdealSpec({2}, {0}), math_error);
    }
}
