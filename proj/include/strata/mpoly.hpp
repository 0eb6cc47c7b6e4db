#pragma once

#include <map>
#include <string>
#include <vector>

#include "strata/field.hpp"

namespace strata {

class RationalFunc;

// Sparse multivariate polynomial. Variables are an explicit ordered set
// (sorted by name); exponent tuples have one entry per variable and no term
// stores a zero coefficient. A variable may be declared but absent from all
// terms (needed so that d/dy of x^2 is 0 rather than an error when y is in
// scope).
class MPoly {
public:
    using Exp = std::vector<unsigned>;

    MPoly() = default;
    explicit MPoly(FieldElem c);
    MPoly(long c) : MPoly(FieldElem(c)) {}

    static MPoly variable(const std::string& name);
    static MPoly monomial(const std::vector<std::string>& vars, Exp e, FieldElem c);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exp, FieldElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    FieldElem constant_value() const;  // error unless constant
    bool has_var(const std::string& name) const;

    // Declares extra variables (zero exponent everywhere).
    MPoly with_vars(const std::vector<std::string>& names) const;
    // Drops variables that appear in no term.
    MPoly pruned() const;

    std::size_t total_degree() const;  // 0 for the zero polynomial
    unsigned degree_in(const std::string& var) const;
    unsigned min_exponent(const std::string& var) const;  // 0 if zero polynomial

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly scaled(const FieldElem& s) const;
    MPoly pow(unsigned k) const;

    friend bool operator==(const MPoly& a, const MPoly& b);
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // Formal partial derivative; unknown variable is an error.
    MPoly diff(const std::string& var) const;

    // Exact evaluation; the map must cover every declared variable.
    FieldElem eval(const std::map<std::string, FieldElem>& point) const;

    // Exact composition with rational functions; must cover every variable.
    RationalFunc substitute(const std::map<std::string, RationalFunc>& sub) const;

    // Composition with polynomials; unmapped variables stay themselves.
    MPoly substitute_partial(const std::map<std::string, MPoly>& sub) const;

    // Divides by var^k; error if some term has exponent < k.
    MPoly divide_by_power(const std::string& var, unsigned k) const;

    // The coefficient of var in the degree-one part, and the linear form at
    // the origin (differential) as a map var -> coefficient.
    std::map<std::string, FieldElem> differential_at_origin() const;

    FieldElem leading_coefficient() const;  // of the lex-largest exponent

    std::string str() const;

private:
    std::vector<std::string> vars_;          // sorted, unique
    std::map<Exp, FieldElem> terms_;

    void add_term(const Exp& e, const FieldElem& c);
    static void align(const MPoly& a, const MPoly& b, MPoly& outa, MPoly& outb);
    MPoly remapped(const std::vector<std::string>& newvars) const;
};

// Quotient of multivariate polynomials. Representation is reduced by scalar
// and monomial content (full multivariate gcd is deliberately not used);
// equality testing cross-multiplies.
class RationalFunc {
public:
    RationalFunc() : num_(), den_(1) {}
    RationalFunc(long c) : num_(c), den_(1) {}
    RationalFunc(FieldElem c) : num_(std::move(c)), den_(1) {}
    RationalFunc(MPoly n) : num_(std::move(n)), den_(1) {}
    RationalFunc(MPoly n, MPoly d);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunc operator-() const;
    friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b);
    friend RationalFunc operator-(const RationalFunc& a, const RationalFunc& b);
    friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b);
    friend RationalFunc operator/(const RationalFunc& a, const RationalFunc& b);
    RationalFunc& operator+=(const RationalFunc& o) { return *this = *this + o; }
    RationalFunc& operator-=(const RationalFunc& o) { return *this = *this - o; }
    RationalFunc& operator*=(const RationalFunc& o) { return *this = *this * o; }
    RationalFunc inv() const;

    friend bool operator==(const RationalFunc& a, const RationalFunc& b);
    friend bool operator!=(const RationalFunc& a, const RationalFunc& b) { return !(a == b); }

    RationalFunc diff(const std::string& var) const;
    RationalFunc substitute(const std::map<std::string, RationalFunc>& sub) const;
    FieldElem eval(const std::map<std::string, FieldElem>& point) const;  // error if den -> 0

    std::string str() const;

private:
    MPoly num_, den_;
    void reduce();
};

}  // namespace strata
