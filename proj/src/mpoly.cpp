#include "strata/mpoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace strata {

MPoly::MPoly(FieldElem c) {
    if (!c.is_zero()) terms_.emplace(Exp{}, std::move(c));
}

MPoly MPoly::variable(const std::string& name) {
    MPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exp{1}, FieldElem(1));
    return p;
}

MPoly MPoly::monomial(const std::vector<std::string>& vars, Exp e, FieldElem c) {
    if (vars.size() != e.size()) throw math_error("mpoly: exponent arity mismatch");
    MPoly p;
    p.vars_ = vars;
    if (!std::is_sorted(p.vars_.begin(), p.vars_.end()))
        throw math_error("mpoly: variables must be sorted");
    if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

bool MPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second.is_one() &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](unsigned x) { return x == 0; });
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exp& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

FieldElem MPoly::constant_value() const {
    if (terms_.empty()) return FieldElem(0);
    if (!is_constant()) throw math_error("mpoly: not a constant: " + str());
    return terms_.begin()->second;
}

bool MPoly::has_var(const std::string& name) const {
    return std::binary_search(vars_.begin(), vars_.end(), name);
}

MPoly MPoly::remapped(const std::vector<std::string>& newvars) const {
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(newvars.begin(), newvars.end(), vars_[i]);
        pos[i] = static_cast<std::size_t>(it - newvars.begin());
    }
    MPoly r;
    r.vars_ = newvars;
    for (const auto& [e, c] : terms_) {
        Exp ne(newvars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

MPoly MPoly::with_vars(const std::vector<std::string>& names) const {
    std::set<std::string> all(vars_.begin(), vars_.end());
    all.insert(names.begin(), names.end());
    std::vector<std::string> merged(all.begin(), all.end());
    if (merged == vars_) return *this;
    return remapped(merged);
}

MPoly MPoly::pruned() const {
    std::vector<std::string> used;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        bool seen = false;
        for (const auto& [e, c] : terms_)
            if (e[i] > 0) {
                seen = true;
                break;
            }
        if (seen) used.push_back(vars_[i]);
    }
    if (used.size() == vars_.size()) return *this;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (std::binary_search(used.begin(), used.end(), vars_[i])) keep.push_back(i);
    MPoly r;
    r.vars_ = used;
    for (const auto& [e, c] : terms_) {
        Exp ne(keep.size());
        for (std::size_t j = 0; j < keep.size(); ++j) ne[j] = e[keep[j]];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

void MPoly::align(const MPoly& a, const MPoly& b, MPoly& outa, MPoly& outb) {
    if (a.vars_ == b.vars_) {
        outa = a;
        outb = b;
        return;
    }
    std::set<std::string> all(a.vars_.begin(), a.vars_.end());
    all.insert(b.vars_.begin(), b.vars_.end());
    std::vector<std::string> merged(all.begin(), all.end());
    outa = a.remapped(merged);
    outb = b.remapped(merged);
}

void MPoly::add_term(const Exp& e, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    MPoly a, b;
    align(*this, o, a, b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return *this = std::move(a);
}

MPoly& MPoly::operator-=(const MPoly& o) {
    return *this += -o;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly x, y;
    MPoly::align(a, b, x, y);
    MPoly r;
    r.vars_ = x.vars_;
    for (const auto& [e1, c1] : x.terms_)
        for (const auto& [e2, c2] : y.terms_) {
            MPoly::Exp e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MPoly MPoly::scaled(const FieldElem& s) const {
    if (s.is_zero()) {
        MPoly r;
        r.vars_ = vars_;
        return r;
    }
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = c * s;
    return r;
}

MPoly MPoly::pow(unsigned k) const {
    MPoly r(FieldElem(1));
    MPoly base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
    MPoly x, y;
    MPoly::align(a, b, x, y);
    return x.terms_ == y.terms_;
}

std::size_t MPoly::total_degree() const {
    std::size_t d = 0;
    for (const auto& [e, c] : terms_) {
        std::size_t t = 0;
        for (unsigned x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

unsigned MPoly::degree_in(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return 0;
    std::size_t i = static_cast<std::size_t>(it - vars_.begin());
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

unsigned MPoly::min_exponent(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var || terms_.empty()) return 0;
    std::size_t i = static_cast<std::size_t>(it - vars_.begin());
    unsigned d = terms_.begin()->first[i];
    for (const auto& [e, c] : terms_) d = std::min(d, e[i]);
    return d;
}

MPoly MPoly::diff(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var)
        throw math_error("mpoly: unknown variable '" + var + "' in derivative");
    std::size_t i = static_cast<std::size_t>(it - vars_.begin());
    MPoly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exp ne = e;
        ne[i] -= 1;
        r.add_term(ne, c * FieldElem(static_cast<long>(e[i])));
    }
    return r;
}

FieldElem MPoly::eval(const std::map<std::string, FieldElem>& point) const {
    std::vector<FieldElem> vals;
    vals.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = point.find(v);
        if (it == point.end()) throw math_error("mpoly: no value for variable '" + v + "'");
        vals.push_back(it->second);
    }
    FieldElem acc(0);
    for (const auto& [e, c] : terms_) {
        FieldElem t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= vals[i];
        acc += t;
    }
    return acc;
}

RationalFunc MPoly::substitute(const std::map<std::string, RationalFunc>& sub) const {
    // Common denominator: prod den_v^{deg_v(p)}.
    std::vector<const RationalFunc*> rf;
    std::vector<unsigned> maxdeg(vars_.size(), 0);
    rf.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = sub.find(v);
        if (it == sub.end()) throw math_error("mpoly: substitution misses variable '" + v + "'");
        rf.push_back(&it->second);
    }
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i) maxdeg[i] = std::max(maxdeg[i], e[i]);

    std::vector<std::vector<MPoly>> numpow(vars_.size()), denpow(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        numpow[i].push_back(MPoly(FieldElem(1)));
        denpow[i].push_back(MPoly(FieldElem(1)));
        for (unsigned k = 1; k <= maxdeg[i]; ++k) {
            numpow[i].push_back(numpow[i].back() * rf[i]->num());
            denpow[i].push_back(denpow[i].back() * rf[i]->den());
        }
    }
    MPoly num;
    for (const auto& [e, c] : terms_) {
        MPoly t{c};
        for (std::size_t i = 0; i < e.size(); ++i) {
            t = t * numpow[i][e[i]];
            t = t * denpow[i][maxdeg[i] - e[i]];
        }
        num += t;
    }
    MPoly den(FieldElem(1));
    for (std::size_t i = 0; i < vars_.size(); ++i) den = den * denpow[i][maxdeg[i]];
    return RationalFunc(std::move(num), std::move(den));
}

MPoly MPoly::substitute_partial(const std::map<std::string, MPoly>& sub) const {
    std::vector<const MPoly*> repl(vars_.size(), nullptr);
    std::vector<unsigned> maxdeg(vars_.size(), 0);
    bool any = false;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = sub.find(vars_[i]);
        if (it != sub.end()) {
            repl[i] = &it->second;
            any = true;
        }
    }
    if (!any) return *this;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (repl[i]) maxdeg[i] = std::max(maxdeg[i], e[i]);

    std::vector<std::vector<MPoly>> powers(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (!repl[i]) continue;
        powers[i].push_back(MPoly(FieldElem(1)));
        for (unsigned k = 1; k <= maxdeg[i]; ++k)
            powers[i].push_back(powers[i].back() * *repl[i]);
    }
    MPoly acc;
    for (const auto& [e, c] : terms_) {
        MPoly t{c};
        Exp kept(vars_.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (repl[i])
                t = t * powers[i][e[i]];
            else
                kept[i] = e[i];
        }
        t = t * monomial(vars_, kept, FieldElem(1));
        acc += t;
    }
    return acc.pruned();
}

MPoly MPoly::divide_by_power(const std::string& var, unsigned k) const {
    if (k == 0) return *this;
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var)
        throw math_error("mpoly: unknown variable '" + var + "' in division");
    std::size_t i = static_cast<std::size_t>(it - vars_.begin());
    MPoly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[i] < k) throw math_error("mpoly: not divisible by " + var + "^" + std::to_string(k));
        Exp ne = e;
        ne[i] -= k;
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

std::map<std::string, FieldElem> MPoly::differential_at_origin() const {
    std::map<std::string, FieldElem> d;
    for (const auto& [e, c] : terms_) {
        std::size_t tot = 0, at = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            tot += e[i];
            if (e[i]) at = i;
        }
        if (tot == 1) d[vars_[at]] = c;
    }
    return d;
}

FieldElem MPoly::leading_coefficient() const {
    if (terms_.empty()) throw math_error("mpoly: zero polynomial has no leading coefficient");
    return terms_.rbegin()->second;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        FieldElem c = it->second;
        bool neg = !c.modulus() && sgn(c.rat()) < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) c = -c;
        bool has_mon = false;
        std::ostringstream mon;
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] == 0) continue;
            if (has_mon) mon << "*";
            has_mon = true;
            mon << vars_[i];
            if (it->first[i] > 1) mon << "^" << it->first[i];
        }
        if (!has_mon) {
            os << c.str();
        } else if (c.is_one()) {
            os << mon.str();
        } else {
            os << c.str() << "*" << mon.str();
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

RationalFunc::RationalFunc(MPoly n, MPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw math_error("rationalfunc: zero denominator");
    reduce();
}

void RationalFunc::reduce() {
    if (num_.is_zero()) {
        num_ = MPoly();
        den_ = MPoly(FieldElem(1));
        return;
    }
    // Common monomial content.
    const std::vector<std::string> den_vars = den_.vars();
    for (const auto& v : den_vars) {
        if (!num_.has_var(v)) continue;
        unsigned k = std::min(num_.min_exponent(v), den_.min_exponent(v));
        if (k) {
            num_ = num_.divide_by_power(v, k);
            den_ = den_.divide_by_power(v, k);
        }
    }
    num_ = num_.pruned();
    den_ = den_.pruned();
    // Scalar normalization: den's leading coefficient becomes 1.
    FieldElem lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        FieldElem inv = lc.inv();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunc RationalFunc::operator-() const {
    RationalFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
    if (a.den_ == b.den_) return RationalFunc(a.num_ + b.num_, a.den_);
    return RationalFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunc operator-(const RationalFunc& a, const RationalFunc& b) {
    return a + (-b);
}

RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
    return RationalFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunc RationalFunc::inv() const {
    if (num_.is_zero()) throw math_error("rationalfunc: division by zero");
    return RationalFunc(den_, num_);
}

RationalFunc operator/(const RationalFunc& a, const RationalFunc& b) {
    return a * b.inv();
}

bool operator==(const RationalFunc& a, const RationalFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFunc RationalFunc::diff(const std::string& var) const {
    MPoly n = num_, d = den_;
    if (!n.has_var(var)) n = n.with_vars({var});
    if (!d.has_var(var)) d = d.with_vars({var});
    return RationalFunc(n.diff(var) * d - n * d.diff(var), d * d);
}

RationalFunc RationalFunc::substitute(const std::map<std::string, RationalFunc>& sub) const {
    RationalFunc n = num_.substitute(sub);
    RationalFunc d = den_.substitute(sub);
    if (d.is_zero()) throw math_error("rationalfunc: substitution sends denominator to zero");
    return n / d;
}

FieldElem RationalFunc::eval(const std::map<std::string, FieldElem>& point) const {
    FieldElem d = den_.eval(point);
    if (d.is_zero())
        throw math_error("rationalfunc: denominator (" + den_.str() + ") vanishes at the point");
    return num_.eval(point) / d;
}

std::string RationalFunc::str() const {
    if (is_polynomial()) {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace strata
