#include "strata/unistrata.hpp"

#include <algorithm>
#include <sstream>

namespace strata::uni {

Shape::Shape(std::vector<int> sizes) : m(std::move(sizes)) {
    if (m.empty()) throw math_error("shape: needs at least one entry");
    for (int mi : m)
        if (mi < 1) throw math_error("shape: every m_i must be >= 1");
}

int Shape::total() const {
    int t = 0;
    for (int mi : m) t += mi;
    return t;
}

std::string Shape::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << ")";
    return os.str();
}

std::string a_name(int i, int j) {
    return "a" + std::to_string(i) + "_" + std::to_string(j);
}
std::string b_name(int i, int j) {
    return "b" + std::to_string(i) + "_" + std::to_string(j);
}

StratPoint StratPoint::origin(const Shape& s) {
    StratPoint pt{s, {}, {}};
    for (int mi : s.m) {
        pt.b.emplace_back(mi, FieldElem(0));
        pt.a.emplace_back(mi, FieldElem(0));
    }
    return pt;
}

void StratPoint::validate() const {
    if (static_cast<int>(a.size()) != shape.n() || static_cast<int>(b.size()) != shape.n())
        throw math_error("stratpoint: coefficient blocks do not match the shape");
    for (int i = 0; i < shape.n(); ++i)
        if (static_cast<int>(a[i].size()) != shape.m[i] ||
            static_cast<int>(b[i].size()) != shape.m[i])
            throw math_error("stratpoint: block " + std::to_string(i + 1) + " has wrong length");
}

UPoly StratPoint::h(int i) const {
    std::vector<FieldElem> c = b[i];
    c.push_back(FieldElem(1));
    return UPoly("x", std::move(c));
}

UPoly StratPoint::f(int i) const {
    return UPoly("x", a[i]);
}

AssembledTuple assemble(const StratPoint& pt) {
    pt.validate();
    const int n = pt.shape.n();
    UPoly h = UPoly::constant("x", FieldElem(1));
    for (int i = 0; i < n; ++i) h = h * pt.h(i);
    AssembledTuple t{std::move(h), {}};
    for (int i = 0; i < n; ++i) {
        UPoly pi = pt.f(i);
        for (int j = 0; j < n; ++j)
            if (j != i) pi = pi * pt.h(j);
        t.p.push_back(std::move(pi));
    }
    return t;
}

std::size_t colength(const AssembledTuple& t) {
    if (t.h.is_zero()) throw math_error("colength: h must be nonzero");
    std::vector<UPoly> gens = t.p;
    gens.push_back(t.h);
    return *gcd_list(gens).degree();
}

std::size_t colength_oracle(const AssembledTuple& t) {
    const std::size_t m = *t.h.degree();
    Mat<FieldElem> mat(m * t.p.size(), m);
    std::size_t row = 0;
    for (const auto& pj : t.p) {
        for (std::size_t a = 0; a < m; ++a, ++row) {
            UPoly shifted = pj * UPoly::monomial("x", a, FieldElem(1));
            UPoly r = rem(shifted, t.h);
            for (std::size_t c = 0; c < m; ++c) mat.at(row, c) = r.coeff(c);
        }
    }
    return m - rank_of(mat);
}

namespace {

// h and p as univariate polynomials whose coefficients are coordinates of A.
struct SymbolicTuple {
    Poly1<MPoly> h;
    std::vector<Poly1<MPoly>> p;
};

SymbolicTuple symbolic_tuple(const Shape& s) {
    const int n = s.n();
    std::vector<Poly1<MPoly>> hs, fs;
    for (int i = 0; i < n; ++i) {
        std::vector<MPoly> hc, fc;
        for (int j = 0; j < s.m[i]; ++j) {
            hc.push_back(MPoly::variable(b_name(i + 1, j)));
            fc.push_back(MPoly::variable(a_name(i + 1, j)));
        }
        hc.push_back(MPoly(1));
        hs.emplace_back("x", std::move(hc));
        fs.emplace_back("x", std::move(fc));
    }
    SymbolicTuple t;
    t.h = Poly1<MPoly>::constant("x", MPoly(1));
    for (const auto& hi : hs) t.h = t.h * hi;
    for (int i = 0; i < n; ++i) {
        Poly1<MPoly> pi = fs[i];
        for (int j = 0; j < n; ++j)
            if (j != i) pi = pi * hs[j];
        t.p.push_back(std::move(pi));
    }
    return t;
}

}  // namespace

Mat<MPoly> symbolic_oracle_matrix(const Shape& s) {
    const std::size_t m = static_cast<std::size_t>(s.total());
    SymbolicTuple t = symbolic_tuple(s);
    Mat<MPoly> mat(m * t.p.size(), m);
    std::size_t row = 0;
    for (const auto& pj : t.p) {
        for (std::size_t a = 0; a < m; ++a, ++row) {
            auto shifted = pj * Poly1<MPoly>::monomial("x", a, MPoly(1));
            auto [q, r] = divrem_monic(shifted, t.h);
            for (std::size_t c = 0; c < m; ++c) mat.at(row, c) = r.coeff(c);
        }
    }
    return mat;
}

std::vector<MPoly> stratum_equations(const Shape& s, std::size_t k) {
    const std::size_t m = static_cast<std::size_t>(s.total());
    if (k > m) throw math_error("stratum_equations: k out of range for " + s.str());
    if (k == 0) return {};
    const std::size_t size = m - k + 1;
    Mat<MPoly> mat = symbolic_oracle_matrix(s);

    std::vector<MPoly> minors;
    std::vector<std::size_t> rows(size), cols(size);
    // Iterate over all size-subsets of rows and of columns.
    auto next_subset = [](std::vector<std::size_t>& idx, std::size_t limit) {
        std::size_t k2 = idx.size();
        for (std::size_t i = k2; i-- > 0;) {
            if (idx[i] + (k2 - i) <= limit) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k2; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < size; ++i) rows[i] = i;
    do {
        for (std::size_t i = 0; i < size; ++i) cols[i] = i;
        do {
            Mat<MPoly> sub(size, size);
            for (std::size_t i = 0; i < size; ++i)
                for (std::size_t j = 0; j < size; ++j) sub.at(i, j) = mat.at(rows[i], cols[j]);
            MPoly d = det_cofactor(sub);
            if (!d.is_zero()) minors.push_back(std::move(d));
        } while (next_subset(cols, mat.cols() - 1));
    } while (next_subset(rows, mat.rows() - 1));
    return minors;
}

std::size_t oracle_rank_at(const StratPoint& pt) {
    AssembledTuple t = assemble(pt);
    const std::size_t m = *t.h.degree();
    return m - colength_oracle(t);
}

StratPoint construct_stratum_point(const Shape& s, std::size_t k, Rng& rng, const Field& field,
                                   bool force_root_at_origin) {
    const std::size_t m1 = static_cast<std::size_t>(s.m[0]);
    if (k > m1)
        throw math_error("construct_stratum_point: k > m_1 is unsupported; order the shape so "
                         "m_1 is maximal");
    const int tries = 500;
    for (int attempt = 0; attempt < tries; ++attempt) {
        // Common divisor d, monic of degree k.
        std::vector<FieldElem> dc;
        for (std::size_t j = 0; j < k; ++j)
            dc.push_back(j == 0 && force_root_at_origin ? FieldElem(0) : rng.small(field));
        dc.push_back(FieldElem::in_field(1, field));
        UPoly d("x", std::move(dc));

        auto random_poly = [&](long degree_bound, bool monic) {
            std::vector<FieldElem> c;
            for (long j = 0; j < degree_bound; ++j) c.push_back(rng.small(field));
            if (monic) c.push_back(FieldElem::in_field(1, field));
            return UPoly("x", std::move(c));
        };

        StratPoint pt{s, {}, {}};
        for (int i = 0; i < s.n(); ++i) {
            UPoly hi, fi;
            if (i == 0) {
                hi = d * random_poly(static_cast<long>(m1 - k), true);
                fi = d * random_poly(static_cast<long>(m1 - k), false);
            } else {
                hi = random_poly(s.m[i], true);
                fi = random_poly(s.m[i], false);
            }
            std::vector<FieldElem> bc, ac;
            for (int j = 0; j < s.m[i]; ++j) {
                bc.push_back(hi.coeff(j));
                ac.push_back(fi.coeff(j));
            }
            pt.b.push_back(std::move(bc));
            pt.a.push_back(std::move(ac));
        }
        if (colength(assemble(pt)) == k) return pt;
    }
    throw math_error("construct_stratum_point: no point of colength " + std::to_string(k) +
                     " found for shape " + s.str());
}

namespace {

nlohmann::ordered_json scalar_to_json(const FieldElem& v) {
    const mpq_class& q = v.rat();
    if (q.get_den() == 1 && q.get_num().fits_slong_p())
        return nlohmann::ordered_json(q.get_num().get_si());
    return nlohmann::ordered_json(v.str());
}

FieldElem scalar_from_json(const nlohmann::json& j, const Field& field) {
    if (j.is_number_integer()) return FieldElem::in_field(j.get<long>(), field);
    if (j.is_string()) return parse_field_elem(j.get<std::string>(), field);
    throw math_error("stratpoint: coefficient must be an integer or 'p/q' text");
}

}  // namespace

nlohmann::ordered_json to_json(const StratPoint& pt) {
    nlohmann::ordered_json j;
    j["shape"] = pt.shape.m;
    nlohmann::ordered_json bs = nlohmann::ordered_json::array(),
                           as = nlohmann::ordered_json::array();
    for (const auto& row : pt.b) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& v : row) r.push_back(scalar_to_json(v));
        bs.push_back(std::move(r));
    }
    for (const auto& row : pt.a) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& v : row) r.push_back(scalar_to_json(v));
        as.push_back(std::move(r));
    }
    j["b"] = std::move(bs);
    j["a"] = std::move(as);
    return j;
}

StratPoint strat_point_from_json(const nlohmann::json& j, const Field& field) {
    Shape s(j.at("shape").get<std::vector<int>>());
    StratPoint pt{s, {}, {}};
    for (const auto& row : j.at("b")) {
        std::vector<FieldElem> r;
        for (const auto& v : row) r.push_back(scalar_from_json(v, field));
        pt.b.push_back(std::move(r));
    }
    for (const auto& row : j.at("a")) {
        std::vector<FieldElem> r;
        for (const auto& v : row) r.push_back(scalar_from_json(v, field));
        pt.a.push_back(std::move(r));
    }
    pt.validate();
    return pt;
}

}  // namespace strata::uni
