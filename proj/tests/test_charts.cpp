#include <doctest.h>

#include "strata/charts.hpp"
#include "strata/parse.hpp"

using namespace strata;
using namespace strata::charts;

TEST_CASE("init_tower coordinate counts") {
    CHECK(ChartTower(uni::Shape({2})).coords().size() == 4);
    CHECK(ChartTower(uni::Shape({1, 1})).coords().size() == 4);
    CHECK(ChartTower(uni::Shape({2, 1})).coords().size() == 6);
}

TEST_CASE("level-0 equations of the deepest stratum are the a coordinates") {
    ChartTower t(uni::Shape({2, 1}));
    auto eqs = t.proper_transform_equations(3);
    REQUIRE(eqs.size() == 3);
    for (const auto& e : eqs) {
        CHECK(e.den().is_one());
        CHECK(e.num().total_degree() == 1);
    }
    CHECK_THROWS_AS(t.proper_transform_equations(2), math_error);
}

TEST_CASE("first blowup of shape (2) reproduces the q formula") {
    ChartTower t(uni::Shape({2}));
    t.step(1);
    CHECK(t.levels() == 1);
    CHECK(t.coords().size() == 4);
    CHECK(t.current_degrees()[0] == 1);

    // The paper-form record: h = q*f + f^1 with
    // q = (1/a_{1,1}) (x + b_{1,1} - a_{1,0}/a_{1,1}); in chart coordinates
    // a_{1,1} = e1 and a_{1,0}/a_{1,1} = u1_1_0.
    REQUIRE(!t.divisions().empty());
    const DivisionRecord& rec = t.divisions().front();
    CHECK(rec.recursion == Recursion::paper);
    CHECK(rec.identity_ok);
    RationalFunc e1(MPoly::variable("e1"));
    RationalFunc u(MPoly::variable("u1_1_0"));
    RationalFunc b11(MPoly::variable("b1_1"));
    Poly1<RationalFunc> q_expected("x", {(b11 - u) / e1, RationalFunc(1) / e1});
    CHECK(rec.quotient == q_expected);

    // f^1 is the single constant u^2 - b_{1,1} u + b_{1,0}.
    auto eqs = t.proper_transform_equations(1);
    REQUIRE(eqs.size() == 1);
    MPoly expect = parse_mpoly("u1_1_0^2 - b1_1*u1_1_0 + b1_0");
    CHECK(eqs[0] == RationalFunc(expect));
}

TEST_CASE("shape (1): the remainder sequence terminates at once") {
    ChartTower t(uni::Shape({1}));
    t.step(1);
    CHECK(t.level_info()[0].exceptional == "e1");
    CHECK(t.current_degrees()[0] == 0);
    CHECK(t.next_stratum() == 0);
    CHECK_THROWS_AS(t.step(1), math_error);
    CHECK_THROWS_AS(t.step(2), math_error);
    CHECK_THROWS_AS(t.step(0), math_error);
}

TEST_CASE("the divisor set lists exceptional coordinates and the next stratum") {
    ChartTower t(uni::Shape({2, 1}));
    t.step(1);
    DivisorSet d = divisor_set(t);
    REQUIRE(d.exceptional.size() == 1);
    CHECK(d.exceptional[0].first == 3);
    CHECK(d.exceptional[0].second == RationalFunc(MPoly::variable("e1")));
    REQUIRE(d.proper.size() == 1);
    CHECK(d.proper[0].first == 2);
    CHECK(d.proper[0].second.size() == 2);
}

TEST_CASE("degree bookkeeping over two steps of shape (2)") {
    ChartTower t(uni::Shape({2}));
    t.step(1);
    t.step(1);
    int total = 0;
    for (int d : t.current_degrees()) total += d;
    CHECK(total == 0);
    CHECK(t.coords().size() == 4);
    for (const auto& rec : t.divisions()) CHECK(rec.identity_ok);
}

TEST_CASE("shape (1,1) after one step: the other index contributes a ratio coordinate") {
    ChartTower t(uni::Shape({1, 1}));
    t.step(1);
    auto eqs = t.proper_transform_equations(1);
    REQUIRE(eqs.size() == 1);
    CHECK(eqs[0] == RationalFunc(MPoly::variable("u1_2_0")));
}

TEST_CASE("downstairs") {
    ChartTower t(uni::Shape({2}));
    t.step(1);
    SUBCASE("exceptional value zero lands in the deepest stratum") {
        std::map<std::string, FieldElem> pt{{"e1", FieldElem(0)},
                                            {"u1_1_0", FieldElem(3)},
                                            {"b1_0", FieldElem(1)},
                                            {"b1_1", FieldElem(2)}};
        uni::StratPoint s = t.downstairs(pt);
        CHECK(s.a[0][0].is_zero());
        CHECK(s.a[0][1].is_zero());
        CHECK(uni::colength(uni::assemble(s)) == 2);
    }
    SUBCASE("round trip through the explicit level-1 lift") {
        // Off the center the blowup is an isomorphism: lift a point with
        // a_{1,1} != 0 by e1 = a_{1,1}, u = a_{1,0}/a_{1,1}.
        uni::StratPoint s = uni::StratPoint::origin(uni::Shape({2}));
        s.a[0][1] = FieldElem(2);
        s.a[0][0] = FieldElem(4);
        s.b[0][1] = FieldElem(-1);
        s.b[0][0] = FieldElem(5);
        std::map<std::string, FieldElem> lift{{"e1", s.a[0][1]},
                                              {"u1_1_0", s.a[0][0] / s.a[0][1]},
                                              {"b1_0", s.b[0][0]},
                                              {"b1_1", s.b[0][1]}};
        uni::StratPoint back = t.downstairs(lift);
        CHECK(back.a == s.a);
        CHECK(back.b == s.b);
    }
    SUBCASE("missing coordinate is an error") {
        CHECK_THROWS_AS(t.downstairs({{"e1", FieldElem(1)}}), math_error);
    }
}

TEST_CASE("sampled center points satisfy the stratum equations") {
    Rng rng(99);
    ChartTower t(uni::Shape({2, 1}));
    t.step(1);
    auto eqs = t.proper_transform_equations(t.next_stratum());
    for (int i = 0; i < 10; ++i) {
        auto pt = t.sample_center_point(rng, Field::rationals(), {});
        for (const auto& e : eqs) CHECK(e.eval(pt).is_zero());
    }
}

TEST_CASE("smoothness and normal crossings reports on a small tower") {
    Rng rng(4);
    ChartTower t(uni::Shape({2}));
    t.step(1);
    auto rep = check_smoothness(t, 1, 10, rng);
    CHECK(rep.all_ok());
    CHECK(rep.n_equations == 1);
    auto nc = check_normal_crossings(t, 1, 10, rng);
    CHECK(nc.all_ok());
    CHECK(nc.symbolic_applicable);
    auto bd = check_blowdown(t, 10, rng);
    CHECK(bd.ok());
}

TEST_CASE("paper and euclid recursions agree until an index is divided twice") {
    ChartTower t(uni::Shape({2, 2}));
    t.step(1);
    t.step(2);
    auto p = t.with_recursion(Recursion::paper).proper_transform_equations(2);
    auto e = t.with_recursion(Recursion::euclid).proper_transform_equations(2);
    REQUIRE(p.size() == e.size());
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[i] == e[i]);
}

TEST_CASE("the paper-literal recursion degenerates at the origin of deep charts") {
    // Shape (3), two steps at the same index: the paper remainder picks up
    // the factor q(-rho), so its differential at the chart origin vanishes.
    ChartTower t(uni::Shape({3}));
    t.step(1);
    t.step(1);
    Rng rng(12);
    auto np = check_normal_crossings(t.with_recursion(Recursion::paper), 1, 6, rng);
    CHECK(!np.symbolic_ok);
    auto ne = check_normal_crossings(t.with_recursion(Recursion::euclid), 1, 6, rng);
    CHECK(ne.all_ok());
}

TEST_CASE("full step sequences enumerate index words") {
    CHECK(full_step_sequences(uni::Shape({2})).size() == 1);
    CHECK(full_step_sequences(uni::Shape({1, 1})).size() == 2);
    CHECK(full_step_sequences(uni::Shape({2, 1})).size() == 3);
    CHECK(full_step_sequences(uni::Shape({1, 1, 1})).size() == 6);
}
