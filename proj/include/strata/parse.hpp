#pragma once

#include <string>
#include <vector>

#include "strata/field.hpp"
#include "strata/mpoly.hpp"
#include "strata/poly1.hpp"

namespace strata {

// Carries the 1-based position of the offending character.
struct parse_error : std::runtime_error {
    int line, column;
    parse_error(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line),
          column(column) {}
};

// Grammar: terms joined by + / -; coefficient is an integer or p/q;
// variables are identifiers; ^ is power; * is product.
// Example: x^2*y - 3/2*x + 1
MPoly parse_mpoly(const std::string& text, const Field& f = Field::rationals(),
                  const std::vector<std::string>& declared_vars = {}, int line = 1);

// Same grammar restricted to at most one variable.
UPoly parse_upoly(const std::string& text, const std::string& var,
                  const Field& f = Field::rationals());

}  // namespace strata
