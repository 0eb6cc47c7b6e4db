#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "strata/mpoly.hpp"

namespace strata::poisson {

// Antisymmetric rank-2 contravariant field in local coordinates. Pairs are
// stored with the lower coordinate index first, signs absorbed.
class Bivector {
public:
    explicit Bivector(std::vector<std::string> coords);

    const std::vector<std::string>& coords() const { return coords_; }
    const std::map<std::pair<std::size_t, std::size_t>, RationalFunc>& terms() const {
        return terms_;
    }

    // Adds c * d/du ^ d/dv; u == v is an error.
    void add(const std::string& u, const std::string& v, const RationalFunc& c);
    RationalFunc coeff(const std::string& u, const std::string& v) const;  // signed

    friend bool operator==(const Bivector& a, const Bivector& b);
    friend bool operator!=(const Bivector& a, const Bivector& b) { return !(a == b); }

    std::string str() const;

private:
    std::vector<std::string> coords_;
    std::map<std::pair<std::size_t, std::size_t>, RationalFunc> terms_;
    std::size_t index_of(const std::string& name) const;
};

// y_1 dx_1^dy_1 + ... + y_k dx_k^dy_k + dx_{k+1}^dy_{k+1} + ... + dx_r^dy_r
// in coordinates x_1..x_r, y_1..y_r.
Bivector standard_bivector(int r, int k);

// An invertible-on-its-domain coordinate change: the forward map gives each
// old coordinate as a rational function of the new ones, the witness gives
// the inverse. Composition is the identity (verify_roundtrip).
struct ChartSubst {
    std::vector<std::string> old_coords, new_coords;
    std::map<std::string, RationalFunc> fwd;  // old -> expression in new
    std::map<std::string, RationalFunc> inv;  // new -> expression in old

    bool verify_roundtrip() const;
};

// The blowup chart of the Corollary: y_i = u_i y_1 for 2 <= i <= k, other
// coordinates unchanged. New coordinates x_1..x_r, y_1, u_2..u_k, y_{k+1}..y_r.
ChartSubst blowup_subst(int r, int k);

// Change of frame: old coordinate vector fields are expressed in the new
// frame through the inverse Jacobian of the substitution, coefficients are
// composed with it, wedges expand bilinearly. Exact.
Bivector pullback(const Bivector& bv, const ChartSubst& subst);

// True iff no coefficient, in lowest terms with respect to the named
// coordinate, keeps it in the denominator.
bool check_no_poles(const Bivector& bv, const std::string& coord);

}  // namespace strata::poisson
