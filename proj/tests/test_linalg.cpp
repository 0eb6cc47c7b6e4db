#include <doctest.h>

#include "strata/linalg.hpp"
#include "strata/mpoly.hpp"
#include "strata/parse.hpp"
#include "strata/rng.hpp"

using namespace strata;

TEST_CASE("rank and kernel examples") {
    SUBCASE("identity") {
        auto rk = rank_kernel(Mat<FieldElem>::identity(3));
        CHECK(rk.rank == 3);
        CHECK(rk.kernel.empty());
    }
    SUBCASE("zero 2x3") {
        Mat<FieldElem> m(2, 3);
        auto rk = rank_kernel(m);
        CHECK(rk.rank == 0);
        CHECK(rk.kernel.size() == 3);
    }
    SUBCASE("proportional rows") {
        Mat<FieldElem> m(2, 3);
        m.at(0, 0) = 1;
        m.at(0, 1) = 2;
        m.at(0, 2) = 3;
        m.at(1, 0) = 2;
        m.at(1, 1) = 4;
        m.at(1, 2) = 6;
        auto rk = rank_kernel(m);
        CHECK(rk.rank == 1);
        CHECK(rk.kernel.size() == 2);
        for (const auto& v : rk.kernel)
            for (std::size_t i = 0; i < m.rows(); ++i) {
                FieldElem acc(0);
                for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[j];
                CHECK(acc.is_zero());
            }
    }
}

TEST_CASE("rank-nullity and exact annihilation on random matrices") {
    Rng rng(19);
    Field f = Field::rationals();
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng.next() % 5, c = 1 + rng.next() % 5;
        Mat<FieldElem> m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.small(f);
        auto rk = rank_kernel(m);
        CHECK(rk.rank + rk.kernel.size() == c);
        for (const auto& v : rk.kernel)
            for (std::size_t i = 0; i < r; ++i) {
                FieldElem acc(0);
                for (std::size_t j = 0; j < c; ++j) acc += m.at(i, j) * v[j];
                CHECK(acc.is_zero());
            }
    }
}

TEST_CASE("inverse over rational functions") {
    Mat<RationalFunc> J(2, 2);
    J.at(0, 0) = RationalFunc(MPoly::variable("y"));
    J.at(0, 1) = RationalFunc(MPoly::variable("u"));
    J.at(1, 0) = RationalFunc(0);
    J.at(1, 1) = RationalFunc(1);
    auto inv = inverse(J);
    REQUIRE(inv.has_value());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            RationalFunc acc;
            for (std::size_t k = 0; k < 2; ++k) acc += J.at(i, k) * inv->at(k, j);
            CHECK(acc == RationalFunc(i == j ? 1 : 0));
        }
    Mat<RationalFunc> S(2, 2);  // singular
    S.at(0, 0) = RationalFunc(MPoly::variable("y"));
    S.at(1, 0) = RationalFunc(MPoly::variable("y"));
    CHECK(!inverse(S).has_value());
}

TEST_CASE("cofactor determinant over a polynomial ring") {
    Mat<MPoly> m(2, 2);
    m.at(0, 0) = parse_mpoly("x");
    m.at(0, 1) = parse_mpoly("y");
    m.at(1, 0) = parse_mpoly("1");
    m.at(1, 1) = parse_mpoly("x");
    CHECK(det_cofactor(m) == parse_mpoly("x^2 - y"));
}
