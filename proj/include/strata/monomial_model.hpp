#pragma once

#include <utility>
#include <vector>

#include "strata/biideal.hpp"
#include "strata/linalg.hpp"
#include "strata/rng.hpp"
#include "strata/unistrata.hpp"

#include <json.hpp>

namespace strata::model {

// The pair of exponent sequences (s., t.) defining the planar monomial ideal
// generated by G_i = x^{t_1+...+t_{n-i}} y^{s_1+...+s_i}, i = 0..n.
// Entries may be zero; cosupport at the origin requires (sum s)(sum t) > 0.
struct MonomialIdealSpec {
    std::vector<int> s, t;

    MonomialIdealSpec(std::vector<int> s_, std::vector<int> t_);
    int n() const { return static_cast<int>(s.size()); }
    int sum_s() const;
    int sum_t() const;
    std::string str() const;
};

// G_0, ..., G_n.
std::vector<MPoly> generators(const MonomialIdealSpec& spec);

// L = sum_{i+j <= n+1} s_i t_j.
long colength_L(const MonomialIdealSpec& spec);

// Counts monomials outside the ideal; the generators must be monomials and
// the count finite (a pure x power and a pure y power must appear).
long staircase_colength(const std::vector<MPoly>& gens);

// The n x (n+1) bidiagonal matrix M with x^{t_i} on the diagonal and
// y^{s_{n+1-i}} above it.
Mat<MPoly> det_matrix(const MonomialIdealSpec& spec);

// det of M with column (n+1-i) deleted (1-based), for comparing against G_i.
MPoly deleted_minor(const MonomialIdealSpec& spec, int i);

// (dim Hom(a, A/a), dim Ext^1(a, A/a)) computed from the short resolution:
// the kernel and cokernel of phi -> phi o M^t on Hom(A^{n+1}, A/a).
std::pair<long, long> tangent_ext_dims(const MonomialIdealSpec& spec, long L_limit = 64);

// Field-valued deformation parameters: diagonal tails b and last column a,
// block i holding t_i coefficients each.
struct DeformParams {
    std::vector<std::vector<FieldElem>> b, a;

    static DeformParams zero(const MonomialIdealSpec& spec);
    static DeformParams sample(const MonomialIdealSpec& spec, Rng& rng,
                               const Field& field = Field::rationals());
    static DeformParams from_json(const nlohmann::json& j, const MonomialIdealSpec& spec,
                                  const Field& field = Field::rationals());
    void validate(const MonomialIdealSpec& spec) const;
};

// Ideal of n x n minors of M + N, where N carries the deformation on the
// main diagonal and last column.
bi::BiIdeal deform(const MonomialIdealSpec& spec, const DeformParams& p);

// The deformed matrix itself.
Mat<MPoly> deformed_matrix(const MonomialIdealSpec& spec, const DeformParams& p);

// Restriction to the x-axis as a point of A(t_1,...,t_n): h_i = x^{t_i} +
// sum b_{i,j} x^j, f_i = sum a_{i,j} x^j. Blocks with t_i = 0 contribute
// h_i = 1, f_i = 0 and are dropped from the shape. Error if sum t = 0.
uni::StratPoint restrict_x_axis_point(const MonomialIdealSpec& spec, const DeformParams& p);
uni::AssembledTuple restrict_x_axis(const MonomialIdealSpec& spec, const DeformParams& p);

}  // namespace strata::model
