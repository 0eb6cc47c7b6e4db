#include "strata/field.hpp"

namespace strata {

Field Field::prime(std::uint64_t p) {
    if (p < 2) throw math_error("field: prime modulus must be >= 2");
    mpz_class z(std::to_string(p));
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw math_error("field: modulus " + std::to_string(p) + " is not prime");
    return Field{p};
}

FieldElem FieldElem::in_field(long v, const Field& f) {
    return in_field(mpq_class(v), f);
}

FieldElem FieldElem::in_field(mpq_class v, const Field& f) {
    FieldElem e{std::move(v)};
    if (f.is_prime()) {
        e.p_ = f.p;
        e.reduce_mod();
    }
    return e;
}

// Maps the rational payload to its residue: num * den^{-1} mod p.
void FieldElem::reduce_mod() {
    mpz_class p(std::to_string(p_));
    mpz_class den = q_.get_den();
    mpz_class num = q_.get_num() % p;
    if (den != 1) {
        mpz_class dinv;
        if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw math_error("field: denominator " + den.get_str() +
                             " not invertible mod " + std::to_string(p_));
        num = (num * dinv) % p;
    }
    if (num < 0) num += p;
    q_ = mpq_class(num);
}

void FieldElem::align(FieldElem& a, FieldElem& b) {
    if (a.p_ == b.p_) return;
    if (a.p_ == 0) {
        a.p_ = b.p_;
        a.reduce_mod();
    } else if (b.p_ == 0) {
        b.p_ = a.p_;
        b.reduce_mod();
    } else {
        throw math_error("field: mixing residues mod " + std::to_string(a.p_) +
                         " and mod " + std::to_string(b.p_));
    }
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    r.q_ = -r.q_;
    if (r.p_) r.reduce_mod();
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    FieldElem rhs = o;
    align(*this, rhs);
    q_ += rhs.q_;
    if (p_) reduce_mod();
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
    FieldElem rhs = o;
    align(*this, rhs);
    q_ -= rhs.q_;
    if (p_) reduce_mod();
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    FieldElem rhs = o;
    align(*this, rhs);
    q_ *= rhs.q_;
    if (p_) reduce_mod();
    return *this;
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw math_error("field: division by zero");
    FieldElem r = *this;
    if (p_ == 0) {
        r.q_ = 1 / q_;
        return r;
    }
    mpz_class p(std::to_string(p_)), v = q_.get_num(), vinv;
    if (mpz_invert(vinv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0)
        throw math_error("field: residue not invertible");
    r.q_ = mpq_class(vinv);
    return r;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
    FieldElem rhs = o;
    align(*this, rhs);
    return *this *= rhs.inv();
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    FieldElem x = a, y = b;
    FieldElem::align(x, y);
    return x.q_ == y.q_;
}

bool operator<(const FieldElem& a, const FieldElem& b) {
    FieldElem x = a, y = b;
    FieldElem::align(x, y);
    return x.q_ < y.q_;
}

std::string FieldElem::str() const {
    return q_.get_str();
}

FieldElem parse_field_elem(const std::string& text, const Field& f) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw math_error("field: cannot parse scalar '" + text + "'");
    q.canonicalize();
    return FieldElem::in_field(std::move(q), f);
}

}  // namespace strata
