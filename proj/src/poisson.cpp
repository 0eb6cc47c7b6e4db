#include "strata/poisson.hpp"

#include <algorithm>
#include <sstream>

#include "strata/linalg.hpp"

namespace strata::poisson {

Bivector::Bivector(std::vector<std::string> coords) : coords_(std::move(coords)) {
    std::vector<std::string> sorted = coords_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw math_error("bivector: duplicate coordinate");
}

std::size_t Bivector::index_of(const std::string& name) const {
    auto it = std::find(coords_.begin(), coords_.end(), name);
    if (it == coords_.end()) throw math_error("bivector: unknown coordinate '" + name + "'");
    return static_cast<std::size_t>(it - coords_.begin());
}

void Bivector::add(const std::string& u, const std::string& v, const RationalFunc& c) {
    std::size_t i = index_of(u), j = index_of(v);
    if (i == j) throw math_error("bivector: cannot pair a coordinate with itself");
    RationalFunc val = c;
    if (i > j) {
        std::swap(i, j);
        val = -val;
    }
    auto key = std::make_pair(i, j);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (!val.is_zero()) terms_.emplace(key, std::move(val));
    } else {
        it->second += val;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RationalFunc Bivector::coeff(const std::string& u, const std::string& v) const {
    std::size_t i = index_of(u), j = index_of(v);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = terms_.find({i, j});
    if (it == terms_.end()) return RationalFunc();
    return flip ? -it->second : it->second;
}

bool operator==(const Bivector& a, const Bivector& b) {
    if (a.coords_ != b.coords_) return false;
    for (const auto& [k, c] : a.terms_) {
        auto it = b.terms_.find(k);
        if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    for (const auto& [k, c] : b.terms_)
        if (!a.terms_.count(k)) return false;
    return true;
}

std::string Bivector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ") d" << coords_[k.first] << "^d" << coords_[k.second];
    }
    return os.str();
}

Bivector standard_bivector(int r, int k) {
    if (r < 1) throw math_error("standard_bivector: r must be >= 1");
    if (k < 0 || k > r) throw math_error("standard_bivector: need 0 <= k <= r");
    std::vector<std::string> coords;
    for (int i = 1; i <= r; ++i) coords.push_back("x" + std::to_string(i));
    for (int i = 1; i <= r; ++i) coords.push_back("y" + std::to_string(i));
    Bivector bv(coords);
    for (int i = 1; i <= r; ++i) {
        std::string xi = "x" + std::to_string(i), yi = "y" + std::to_string(i);
        if (i <= k)
            bv.add(xi, yi, RationalFunc(MPoly::variable(yi)));
        else
            bv.add(xi, yi, RationalFunc(MPoly(1)));
    }
    return bv;
}

bool ChartSubst::verify_roundtrip() const {
    for (const auto& o : old_coords) {
        RationalFunc back = fwd.at(o).substitute(inv);
        if (!(back == RationalFunc(MPoly::variable(o)))) return false;
    }
    for (const auto& n : new_coords) {
        RationalFunc back = inv.at(n).substitute(fwd);
        if (!(back == RationalFunc(MPoly::variable(n)))) return false;
    }
    return true;
}

ChartSubst blowup_subst(int r, int k) {
    if (k < 1 || k > r) throw math_error("blowup_subst: need 1 <= k <= r");
    ChartSubst s;
    for (int i = 1; i <= r; ++i) s.old_coords.push_back("x" + std::to_string(i));
    for (int i = 1; i <= r; ++i) s.old_coords.push_back("y" + std::to_string(i));
    for (int i = 1; i <= r; ++i) s.new_coords.push_back("x" + std::to_string(i));
    s.new_coords.push_back("y1");
    for (int i = 2; i <= k; ++i) s.new_coords.push_back("u" + std::to_string(i));
    for (int i = k + 1; i <= r; ++i) s.new_coords.push_back("y" + std::to_string(i));

    MPoly y1 = MPoly::variable("y1");
    for (int i = 1; i <= r; ++i) {
        std::string xi = "x" + std::to_string(i);
        s.fwd.emplace(xi, RationalFunc(MPoly::variable(xi)));
        s.inv.emplace(xi, RationalFunc(MPoly::variable(xi)));
    }
    s.fwd.emplace("y1", RationalFunc(y1));
    s.inv.emplace("y1", RationalFunc(y1));
    for (int i = 2; i <= r; ++i) {
        std::string yi = "y" + std::to_string(i);
        if (i <= k) {
            std::string ui = "u" + std::to_string(i);
            s.fwd.emplace(yi, RationalFunc(MPoly::variable(ui) * y1));
            s.inv.emplace(ui, RationalFunc(MPoly::variable(yi), y1));
        } else {
            s.fwd.emplace(yi, RationalFunc(MPoly::variable(yi)));
            s.inv.emplace(yi, RationalFunc(MPoly::variable(yi)));
        }
    }
    return s;
}

Bivector pullback(const Bivector& bv, const ChartSubst& subst) {
    const auto& oldc = subst.old_coords;
    const auto& newc = subst.new_coords;
    if (bv.coords() != oldc)
        throw math_error("pullback: bivector coordinates do not match the substitution");
    const std::size_t n = oldc.size();
    if (newc.size() != n) throw math_error("pullback: substitution is not square");

    // J[a][c] = d(old_a)/d(new_c), as functions of the new coordinates.
    Mat<RationalFunc> J(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        const RationalFunc& expr = subst.fwd.at(oldc[a]);
        for (std::size_t c = 0; c < n; ++c) J.at(a, c) = expr.diff(newc[c]);
    }
    auto Jinv = inverse(J);
    if (!Jinv) throw math_error("pullback: substitution Jacobian is singular");

    Bivector out(newc);
    for (const auto& [key, coeff] : bv.terms()) {
        RationalFunc composed = coeff.substitute(subst.fwd);
        const std::size_t a = key.first, b = key.second;
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t d = c + 1; d < n; ++d) {
                RationalFunc w = Jinv->at(c, a) * Jinv->at(d, b) -
                                 Jinv->at(d, a) * Jinv->at(c, b);
                if (w.is_zero()) continue;
                out.add(newc[c], newc[d], composed * w);
            }
    }
    return out;
}

bool check_no_poles(const Bivector& bv, const std::string& coord) {
    for (const auto& [key, c] : bv.terms()) {
        // Representations are reduced by monomial content, so the prime
        // 'coord' survives in the denominator exactly when there is a pole.
        if (c.den().min_exponent(coord) > 0) return false;
    }
    return true;
}

}  // namespace strata::poisson
