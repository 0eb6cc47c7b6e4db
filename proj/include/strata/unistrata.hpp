#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "strata/linalg.hpp"
#include "strata/mpoly.hpp"
#include "strata/poly1.hpp"
#include "strata/rng.hpp"

#include <json.hpp>

namespace strata::uni {

// The tuple sizes (m_1,...,m_n); every m_i >= 1.
struct Shape {
    std::vector<int> m;

    explicit Shape(std::vector<int> sizes);
    int n() const { return static_cast<int>(m.size()); }
    int total() const;
    std::string str() const;
};

// Coordinate names of the ambient affine space: a{i}_{j}, b{i}_{j},
// i 1-based, j 0-based.
std::string a_name(int i, int j);
std::string b_name(int i, int j);

// A point of the space A(m_1,...,m_n): h_i = x^{m_i} + sum b_{i,j} x^j,
// f_i = sum a_{i,j} x^j. The origin has all a and b zero.
struct StratPoint {
    Shape shape;
    std::vector<std::vector<FieldElem>> b;
    std::vector<std::vector<FieldElem>> a;

    static StratPoint origin(const Shape& s);
    UPoly h(int i) const;  // i is 0-based here and below
    UPoly f(int i) const;
    void validate() const;
};

// h = prod h_i (monic of degree m exactly), p_i = f_i * prod_{j != i} h_j.
struct AssembledTuple {
    UPoly h;
    std::vector<UPoly> p;
};

AssembledTuple assemble(const StratPoint& pt);

// Colength of the ideal (h, p_1, ..., p_n) in k[x]: the degree of its gcd.
std::size_t colength(const AssembledTuple& t);

// Independent Macaulay-style oracle: m minus the rank of the coefficient
// matrix of { Rem(x^a * p_j, h) : 0 <= a < m, j }.
std::size_t colength_oracle(const AssembledTuple& t);

// The symbolic n*m x m oracle matrix over the coordinate ring of A.
Mat<MPoly> symbolic_oracle_matrix(const Shape& s);

// Fitting-style equations of the stratum I^k: all (m-k+1)x(m-k+1) minors of
// the symbolic oracle matrix. k = 0 gives the empty list (whole space).
std::vector<MPoly> stratum_equations(const Shape& s, std::size_t k);

// Rank of the oracle matrix evaluated at a point; the point lies in I^k
// (set-theoretically) iff this rank is <= m-k.
std::size_t oracle_rank_at(const StratPoint& pt);

// Seeded generator of a point with colength exactly k; requires k <= m_1
// (order shapes so m_1 is maximal). force_root_at_origin makes the common
// divisor vanish at x = 0.
StratPoint construct_stratum_point(const Shape& s, std::size_t k, Rng& rng,
                                   const Field& field = Field::rationals(),
                                   bool force_root_at_origin = false);

nlohmann::ordered_json to_json(const StratPoint& pt);
StratPoint strat_point_from_json(const nlohmann::json& j,
                                 const Field& field = Field::rationals());

}  // namespace strata::uni
