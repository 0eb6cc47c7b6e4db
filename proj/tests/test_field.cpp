#include <doctest.h>

#include "strata/field.hpp"

using namespace strata;

TEST_CASE("rational arithmetic is exact") {
    FieldElem a = parse_field_elem("3/4", Field::rationals());
    FieldElem b = parse_field_elem("1/6", Field::rationals());
    CHECK((a + b).str() == "11/12");
    CHECK((a * b).str() == "1/8");
    CHECK((a - a).is_zero());
    CHECK((a / b).str() == "9/2");
    FieldElem third = parse_field_elem("1/3", Field::rationals());
    CHECK((third * FieldElem(3)).is_one());
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(FieldElem(1) / FieldElem(0), math_error);
    CHECK_THROWS_AS(FieldElem(0).inv(), math_error);
}

TEST_CASE("prime field mode") {
    Field f7 = Field::prime(7);
    FieldElem a = FieldElem::in_field(10, f7);
    CHECK(a.str() == "3");
    CHECK((a + FieldElem(4)).is_zero());
    CHECK((a / FieldElem::in_field(5, f7)).str() == "2");  // 3 * 5^{-1} = 3*3 = 2 mod 7
    FieldElem half = parse_field_elem("1/2", Field::rationals());
    CHECK((a * half).str() == "5");  // 3 * 4 = 12 = 5
    CHECK_THROWS_AS(Field::prime(6), math_error);
    CHECK_THROWS_AS(FieldElem::in_field(mpq_class(1, 7), f7), math_error);
}

TEST_CASE("mixing distinct prime fields is an error") {
    FieldElem a = FieldElem::in_field(1, Field::prime(5));
    FieldElem b = FieldElem::in_field(1, Field::prime(7));
    CHECK_THROWS_AS(a + b, math_error);
}

TEST_CASE("equality is decidable across representations") {
    CHECK(parse_field_elem("2/4", Field::rationals()) ==
          parse_field_elem("1/2", Field::rationals()));
    CHECK(FieldElem::in_field(9, Field::prime(7)) == FieldElem::in_field(2, Field::prime(7)));
}
