#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/mpoly.hpp"

namespace strata::bi {

// Total order on monomials x^a y^b. Weighted orders compare the weight
// first (larger weight is larger), then fall back to lex; weights must be
// nonnegative so the order is global.
struct MonomialOrder {
    enum class Kind { lex, weighted };
    Kind kind = Kind::weighted;
    long wx = 1, wy = 1;
    bool y_major = true;  // lex precedence / tiebreak: y above x

    static MonomialOrder lex_y_over_x() { return {Kind::lex, 0, 0, true}; }
    static MonomialOrder lex_x_over_y() { return {Kind::lex, 0, 0, false}; }
    static MonomialOrder graded() { return {Kind::weighted, 1, 1, true}; }
    static MonomialOrder weighted(long wx, long wy, bool y_major = true);

    bool less(unsigned ax, unsigned ay, unsigned bx, unsigned by) const;
    std::string key() const;
};

// A bivariate ideal in k[x,y], given by generators. Reduced Groebner bases
// and the staircase count are cached per order; values are immutable, the
// caches are idempotent.
class BiIdeal {
public:
    BiIdeal() = default;
    explicit BiIdeal(std::vector<MPoly> gens);

    const std::vector<MPoly>& gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    const std::vector<MPoly>& groebner(const MonomialOrder& o = MonomialOrder::graded()) const;

    // Number of standard monomials of the lead ideal; nullopt = infinite.
    std::optional<long> colength(const MonomialOrder& o = MonomialOrder::graded()) const;

    bool contains(const MPoly& f, const MonomialOrder& o = MonomialOrder::graded()) const;

    // x^N and y^N lie in the ideal for N = colength.
    bool supported_at_origin() const;

    bool equals(const BiIdeal& other) const;  // compares reduced graded bases

    std::string str() const;

private:
    std::vector<MPoly> gens_;
    mutable std::map<std::string, std::vector<MPoly>> gb_;
};

// Reduced, monic Groebner basis by Buchberger's algorithm; deterministic.
std::vector<MPoly> buchberger(const std::vector<MPoly>& gens, const MonomialOrder& o);

// Flat limit of the G_m-action y -> lambda*y as lambda -> 0: the ideal of
// lowest-y-weight forms. Requires finite colength and support at the origin.
// The output preserves colength, is y-homogeneous, and is a fixed point.
BiIdeal gm_limit(const BiIdeal& I);

// For a y-homogeneous ideal supported at the origin: replaces each generator
// a(x)*y^s by x^{ord_0 a}*y^s. Colength is preserved (checked).
BiIdeal monomialize(const BiIdeal& I);

// Local incidence length along the x-axis Y = V(y): the order at x = 0 of
// the gcd of the restrictions g(x,0). With total_degree=true, the degree of
// that gcd (the scheme may meet Y away from the origin). If every
// restriction vanishes, the colength of I + (y), provided it is finite.
long incidence_colength(const BiIdeal& I, bool total_degree = false);

// Restrictions g(x,0) of the generators, as univariate polynomials.
std::vector<MPoly> restrict_to_x_axis(const BiIdeal& I);

}  // namespace strata::bi
