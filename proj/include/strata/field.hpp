#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace strata {

// Thrown by arithmetic that has no defined result (division by zero,
// incompatible field modes, a residue with no inverse).
struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficient field descriptor: exact rationals (p == 0) or F_p.
struct Field {
    std::uint64_t p = 0;

    static Field rationals() { return Field{}; }
    static Field prime(std::uint64_t p);
    bool is_prime() const { return p != 0; }
    bool operator==(const Field&) const = default;
    std::string str() const { return p ? "fp:" + std::to_string(p) : "rat"; }
};

// An exact scalar: an arbitrary-precision rational, or a residue mod a prime.
// Values built from plain integers are mode-agnostic rationals; combining one
// with a residue coerces it into that prime field (error if the prime divides
// its denominator). Combining residues of distinct primes is an error.
class FieldElem {
public:
    FieldElem() : q_(0) {}
    FieldElem(long v) : q_(v) {}
    explicit FieldElem(mpq_class v) : q_(std::move(v)) { q_.canonicalize(); }

    static FieldElem in_field(long v, const Field& f);
    static FieldElem in_field(mpq_class v, const Field& f);

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    std::uint64_t modulus() const { return p_; }
    const mpq_class& rat() const { return q_; }

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator/=(const FieldElem& o);
    FieldElem inv() const;

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    // Total order for deterministic container keys; not a field order.
    friend bool operator<(const FieldElem& a, const FieldElem& b);

    std::string str() const;  // "3", "-3/2"

private:
    mpq_class q_;           // residue/1 when p_ != 0
    std::uint64_t p_ = 0;   // 0 = rational mode

    void reduce_mod();
    static void align(FieldElem& a, FieldElem& b);
    friend class FieldOps;
};

// Parses "p/q" or a decimal integer into the given field.
FieldElem parse_field_elem(const std::string& text, const Field& f);

}  // namespace strata
