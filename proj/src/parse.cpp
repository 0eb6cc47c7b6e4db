#include "strata/parse.hpp"

#include <cctype>

namespace strata {

namespace {

class Scanner {
public:
    Scanner(const std::string& s, const Field& f, int line) : s_(s), f_(f), line_(line) {}

    MPoly parse(const std::vector<std::string>& declared) {
        MPoly acc;
        skip_ws();
        if (eof()) fail("empty polynomial");
        bool neg = accept_sign();
        acc += signed_term(neg);
        for (;;) {
            skip_ws();
            if (eof()) break;
            char c = peek();
            if (c == '+' || c == '-') {
                ++i_;
                acc += signed_term(c == '-');
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
        }
        return acc.with_vars(declared);
    }

private:
    const std::string& s_;
    const Field& f_;
    int line_;
    std::size_t i_ = 0;

    bool eof() const { return i_ >= s_.size(); }
    char peek() const { return s_[i_]; }
    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) ++i_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line_, static_cast<int>(i_) + 1);
    }

    bool accept_sign() {
        skip_ws();
        if (!eof() && (peek() == '+' || peek() == '-')) {
            bool neg = peek() == '-';
            ++i_;
            return neg;
        }
        return false;
    }

    MPoly signed_term(bool neg) {
        MPoly t = term();
        return neg ? -t : t;
    }

    MPoly term() {
        MPoly acc(FieldElem::in_field(1, f_));
        bool expect_factor = true;
        for (;;) {
            skip_ws();
            if (eof()) break;
            char c = peek();
            if (expect_factor) {
                if (std::isdigit(static_cast<unsigned char>(c))) {
                    acc = acc.scaled(number());
                } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                    acc = acc * power();
                } else {
                    fail(std::string("expected coefficient or variable, got '") + c + "'");
                }
                expect_factor = false;
            } else if (c == '*') {
                ++i_;
                expect_factor = true;
            } else {
                break;
            }
        }
        if (expect_factor) fail("dangling '*'");
        return acc;
    }

    FieldElem number() {
        std::size_t start = i_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
        std::string text = s_.substr(start, i_ - start);
        skip_ws();
        if (!eof() && peek() == '/') {
            ++i_;
            skip_ws();
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected denominator digits after '/'");
            std::size_t dstart = i_;
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
            std::string den = s_.substr(dstart, i_ - dstart);
            if (den == "0") fail("zero denominator in coefficient");
            text += "/" + den;
        }
        return parse_field_elem(text, f_);
    }

    MPoly power() {
        std::size_t start = i_;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++i_;
        std::string name = s_.substr(start, i_ - start);
        unsigned exp = 1;
        skip_ws();
        if (!eof() && peek() == '^') {
            ++i_;
            skip_ws();
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected exponent digits after '^'");
            std::size_t estart = i_;
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
            exp = static_cast<unsigned>(std::stoul(s_.substr(estart, i_ - estart)));
        }
        MPoly v = MPoly::variable(name);
        return v.pow(exp);
    }
};

}  // namespace

MPoly parse_mpoly(const std::string& text, const Field& f,
                  const std::vector<std::string>& declared, int line) {
    Scanner sc(text, f, line);
    return sc.parse(declared);
}

UPoly parse_upoly(const std::string& text, const std::string& var, const Field& f) {
    MPoly p = parse_mpoly(text, f, {var});
    const auto& vars = p.vars();
    std::size_t vi = vars.size();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == var) {
            vi = i;
            continue;
        }
        if (p.degree_in(vars[i]) > 0)
            throw math_error("parse: unexpected variable '" + vars[i] + "' in univariate input");
    }
    UPoly out(var);
    for (const auto& [e, c] : p.terms())
        out = out + UPoly::monomial(var, vi < e.size() ? e[vi] : 0, c);
    return out;
}

}  // namespace strata
