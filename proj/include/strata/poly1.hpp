#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "strata/field.hpp"

namespace strata {

// Dense univariate polynomial over a coefficient ring C. C must provide
// value semantics, +,-,*, unary -, is_zero(), and ==. Division requires the
// divisor to be monic, or C to be a field (inv()).
//
// The zero polynomial has an empty coefficient vector and no degree
// (degree() is nullopt, never a number).
template <class C>
class Poly1 {
public:
    Poly1() = default;
    explicit Poly1(std::string var) : var_(std::move(var)) {}
    Poly1(std::string var, std::vector<C> coeffs) : var_(std::move(var)), c_(std::move(coeffs)) {
        trim();
    }

    static Poly1 constant(std::string var, C v) {
        return Poly1(std::move(var), std::vector<C>{std::move(v)});
    }
    static Poly1 monomial(std::string var, std::size_t k, C v) {
        std::vector<C> c(k + 1);
        c[k] = std::move(v);
        return Poly1(std::move(var), std::move(c));
    }

    const std::string& var() const { return var_; }
    bool is_zero() const { return c_.empty(); }

    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }

    // Number of stored coefficients; 0 for the zero polynomial.
    std::size_t size() const { return c_.size(); }

    C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C{}; }
    const std::vector<C>& coeffs() const { return c_; }
    C lead() const {
        if (c_.empty()) throw math_error("poly1: zero polynomial has no leading coefficient");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    Poly1 operator-() const {
        Poly1 r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Poly1 operator+(const Poly1& a, const Poly1& b) {
        Poly1 r(pick_var(a, b));
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }
    friend Poly1 operator-(const Poly1& a, const Poly1& b) { return a + (-b); }

    friend Poly1 operator*(const Poly1& a, const Poly1& b) {
        Poly1 r(pick_var(a, b));
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, C{});
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    Poly1 scaled(const C& s) const {
        Poly1 r = *this;
        for (auto& x : r.c_) x = x * s;
        r.trim();
        return r;
    }

    friend bool operator==(const Poly1& a, const Poly1& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

    template <class V>
    V eval(const V& x) const {
        V acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
        return acc;
    }

    // Maps each coefficient through fn; used to push polynomials through
    // chart substitutions.
    template <class F>
    auto map(F&& fn) const {
        using D = decltype(fn(std::declval<const C&>()));
        std::vector<D> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(fn(x));
        return Poly1<D>(var_, std::move(out));
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c_[i].str() << ")";
            if (i >= 1) os << "*" << var_;
            if (i >= 2) os << "^" << i;
        }
        return os.str();
    }

private:
    std::string var_ = "x";
    std::vector<C> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    static std::string pick_var(const Poly1& a, const Poly1& b) {
        if (!a.c_.empty() && !b.c_.empty() && a.var_ != b.var_)
            throw math_error("poly1: mixed variables '" + a.var_ + "' and '" + b.var_ + "'");
        return a.c_.empty() ? b.var_ : a.var_;
    }
};

// Division by a monic divisor; exact over any coefficient ring.
template <class C>
std::pair<Poly1<C>, Poly1<C>> divrem_monic(const Poly1<C>& u, const Poly1<C>& v) {
    if (v.is_zero()) throw math_error("poly1: division by zero polynomial");
    if (!v.is_monic()) throw math_error("poly1: divisor is not monic");
    std::size_t dv = *v.degree();
    std::vector<C> rem(u.coeffs());
    std::vector<C> quo;
    if (u.size() >= dv + 1) quo.assign(u.size() - dv, C{});
    for (std::size_t i = rem.size(); i-- > dv + 0;) {
        if (i < dv) break;
        C c = rem[i];
        if (c.is_zero()) continue;
        quo[i - dv] = c;
        for (std::size_t j = 0; j <= dv; ++j) rem[i - dv + j] -= c * v.coeff(j);
    }
    if (!rem.empty()) rem.resize(dv);
    return {Poly1<C>(u.var(), std::move(quo)), Poly1<C>(v.var(), std::move(rem))};
}

// u = q*v + r with deg r < deg v; requires invertible leading coefficient.
template <class C>
std::pair<Poly1<C>, Poly1<C>> divrem(const Poly1<C>& u, const Poly1<C>& v) {
    if (v.is_zero()) throw math_error("poly1: division by zero polynomial");
    C lead_inv = v.lead().inv();
    auto [q, r] = divrem_monic(u, v.scaled(lead_inv));
    return {q.scaled(lead_inv), r};
}

template <class C>
Poly1<C> rem(const Poly1<C>& u, const Poly1<C>& v) {
    return divrem(u, v).second;
}

template <class C>
Poly1<C> make_monic(const Poly1<C>& u) {
    if (u.is_zero()) throw math_error("poly1: cannot normalize zero polynomial");
    return u.scaled(u.lead().inv());
}

// Monic gcd of a list; signals the zero ideal when every input vanishes.
template <class C>
Poly1<C> gcd_list(const std::vector<Poly1<C>>& gs) {
    Poly1<C> g;
    for (const auto& f : gs) {
        if (f.is_zero()) continue;
        if (g.is_zero()) {
            g = f;
            continue;
        }
        Poly1<C> a = g, b = f;
        while (!b.is_zero()) {
            auto r = rem(a, b);
            a = b;
            b = r;
        }
        g = a;
        if (*g.degree() == 0) break;
    }
    if (g.is_zero()) throw math_error("poly1: gcd of the zero ideal");
    return make_monic(g);
}

// Extended gcd on a pair: g = s*u + t*v with g monic.
template <class C>
struct Egcd {
    Poly1<C> g, s, t;
};

template <class C>
Egcd<C> extended_gcd(const Poly1<C>& u, const Poly1<C>& v) {
    if (u.is_zero() && v.is_zero()) throw math_error("poly1: gcd of the zero ideal");
    Poly1<C> r0 = u, r1 = v;
    Poly1<C> s0 = Poly1<C>::constant(u.var(), C(1)), s1(u.var());
    Poly1<C> t0(u.var()), t1 = Poly1<C>::constant(u.var(), C(1));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = r1;
        r1 = r;
        auto s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        auto t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    C li = r0.lead().inv();
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

using UPoly = Poly1<FieldElem>;

}  // namespace strata
