#include "strata/monomial_model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace strata::model {

MonomialIdealSpec::MonomialIdealSpec(std::vector<int> s_, std::vector<int> t_)
    : s(std::move(s_)), t(std::move(t_)) {
    if (s.empty() || s.size() != t.size())
        throw math_error("spec: s and t must be nonempty sequences of equal length");
    for (int v : s)
        if (v < 0) throw math_error("spec: s entries must be nonnegative");
    for (int v : t)
        if (v < 0) throw math_error("spec: t entries must be nonnegative");
    if (sum_s() == 0 || sum_t() == 0)
        throw math_error("spec: (sum t)(sum s) > 0 required for cosupport at the origin");
}

int MonomialIdealSpec::sum_s() const {
    return std::accumulate(s.begin(), s.end(), 0);
}
int MonomialIdealSpec::sum_t() const {
    return std::accumulate(t.begin(), t.end(), 0);
}

std::string MonomialIdealSpec::str() const {
    std::ostringstream os;
    os << "s=(";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "),t=(";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")";
    return os.str();
}

std::vector<MPoly> generators(const MonomialIdealSpec& spec) {
    const int n = spec.n();
    std::vector<MPoly> gs;
    for (int i = 0; i <= n; ++i) {
        unsigned tx = 0, sy = 0;
        for (int k = 1; k <= n - i; ++k) tx += static_cast<unsigned>(spec.t[k - 1]);
        for (int k = 1; k <= i; ++k) sy += static_cast<unsigned>(spec.s[k - 1]);
        gs.push_back(MPoly::monomial({"x", "y"}, {tx, sy}, FieldElem(1)));
    }
    return gs;
}

long colength_L(const MonomialIdealSpec& spec) {
    const int n = spec.n();
    long L = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i + j <= n + 1) L += static_cast<long>(spec.s[i - 1]) * spec.t[j - 1];
    return L;
}

namespace {

std::pair<unsigned, unsigned> monomial_exponents(const MPoly& g) {
    if (g.terms().size() != 1) throw math_error("staircase: generator is not a monomial");
    MPoly q = g.with_vars({"x", "y"});
    std::size_t xi = 0, yi = 0;
    for (std::size_t i = 0; i < q.vars().size(); ++i) {
        if (q.vars()[i] == "x") xi = i;
        if (q.vars()[i] == "y") yi = i;
    }
    for (const auto& v : q.vars())
        if (v != "x" && v != "y" && q.degree_in(v) > 0)
            throw math_error("staircase: generator outside k[x,y]");
    const auto& e = q.terms().begin()->first;
    return {e[xi], e[yi]};
}

}  // namespace

long staircase_colength(const std::vector<MPoly>& gens) {
    std::vector<std::pair<unsigned, unsigned>> es;
    for (const auto& g : gens)
        if (!g.is_zero()) es.push_back(monomial_exponents(g));
    unsigned purex = 0;
    bool have_purex = false, have_purey = false;
    for (auto [a, b] : es) {
        if (b == 0) {
            purex = have_purex ? std::min(purex, a) : a;
            have_purex = true;
        }
        if (a == 0) have_purey = true;
    }
    if (!have_purex || !have_purey)
        throw math_error("staircase: infinite colength (missing a pure power)");
    long count = 0;
    for (unsigned a = 0; a < purex; ++a) {
        unsigned bound = 0;
        bool first = true;
        for (auto [ga, gb] : es) {
            if (ga > a) continue;
            bound = first ? gb : std::min(bound, gb);
            first = false;
        }
        count += bound;
    }
    return count;
}

Mat<MPoly> det_matrix(const MonomialIdealSpec& spec) {
    const int n = spec.n();
    Mat<MPoly> M(n, n + 1);
    for (int i = 1; i <= n; ++i) {
        M.at(i - 1, i - 1) =
            MPoly::monomial({"x", "y"}, {static_cast<unsigned>(spec.t[i - 1]), 0}, FieldElem(1));
        M.at(i - 1, i) = MPoly::monomial(
            {"x", "y"}, {0, static_cast<unsigned>(spec.s[n - i])}, FieldElem(1));
    }
    return M;
}

MPoly deleted_minor(const MonomialIdealSpec& spec, int i) {
    const int n = spec.n();
    if (i < 0 || i > n) throw math_error("deleted_minor: index out of range");
    Mat<MPoly> M = det_matrix(spec);
    const int del = n + 1 - i;  // 1-based column to delete
    Mat<MPoly> sub(n, n);
    for (int r = 0; r < n; ++r) {
        int cc = 0;
        for (int c = 0; c < n + 1; ++c) {
            if (c == del - 1) continue;
            sub.at(r, cc++) = M.at(r, c);
        }
    }
    return det_cofactor(sub);
}

namespace {

// Staircase cells of the monomial ideal, in a fixed order.
std::vector<std::pair<unsigned, unsigned>> staircase_cells(const MonomialIdealSpec& spec) {
    std::vector<std::pair<unsigned, unsigned>> es;
    for (const auto& g : generators(spec)) es.push_back(monomial_exponents(g));
    unsigned purex = 0;
    bool first = true;
    for (auto [a, b] : es)
        if (b == 0) {
            purex = first ? a : std::min(purex, a);
            first = false;
        }
    std::vector<std::pair<unsigned, unsigned>> cells;
    for (unsigned a = 0; a < purex; ++a) {
        unsigned bound = 0;
        bool fst = true;
        for (auto [ga, gb] : es) {
            if (ga > a) continue;
            bound = fst ? gb : std::min(bound, gb);
            fst = false;
        }
        for (unsigned b = 0; b < bound; ++b) cells.emplace_back(a, b);
    }
    return cells;
}

}  // namespace

std::pair<long, long> tangent_ext_dims(const MonomialIdealSpec& spec, long L_limit) {
    const long L = colength_L(spec);
    if (L > L_limit)
        throw math_error("tangent_ext_dims: L = " + std::to_string(L) + " exceeds limit " +
                         std::to_string(L_limit));
    const int n = spec.n();
    auto cells = staircase_cells(spec);
    if (static_cast<long>(cells.size()) != L)
        throw math_error("tangent_ext_dims: staircase does not match L");
    std::map<std::pair<unsigned, unsigned>, std::size_t> cell_index;
    for (std::size_t i = 0; i < cells.size(); ++i) cell_index[cells[i]] = i;

    auto gens = generators(spec);
    std::vector<std::pair<unsigned, unsigned>> gexp;
    for (const auto& g : gens) gexp.push_back(monomial_exponents(g));
    auto in_ideal = [&](unsigned a, unsigned b) {
        for (auto [ga, gb] : gexp)
            if (ga <= a && gb <= b) return true;
        return false;
    };

    // Multiplication by x^p y^q as an L x L matrix on A/a.
    auto mult_matrix = [&](unsigned p, unsigned q) {
        Mat<FieldElem> m(cells.size(), cells.size());
        for (std::size_t j = 0; j < cells.size(); ++j) {
            unsigned a = cells[j].first + p, b = cells[j].second + q;
            if (in_ideal(a, b)) continue;
            m.at(cell_index.at({a, b}), j) = FieldElem(1);
        }
        return m;
    };

    // phi -> phi o M^t, as an (nL) x ((n+1)L) matrix acting on column blocks.
    Mat<MPoly> M = det_matrix(spec);
    Mat<FieldElem> T(static_cast<std::size_t>(n) * cells.size(),
                     static_cast<std::size_t>(n + 1) * cells.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n + 1; ++j) {
            const MPoly& entry = M.at(i, j);
            if (entry.is_zero()) continue;
            auto [p, q] = monomial_exponents(entry);
            Mat<FieldElem> blk = mult_matrix(p, q);
            for (std::size_t r = 0; r < cells.size(); ++r)
                for (std::size_t c = 0; c < cells.size(); ++c)
                    T.at(i * cells.size() + r, j * cells.size() + c) = blk.at(r, c);
        }
    std::size_t rank = rank_of(T);
    long hom = static_cast<long>((n + 1) * cells.size() - rank);
    long ext1 = static_cast<long>(n * cells.size() - rank);
    // Rank-nullity bookkeeping for the middle of the resolution.
    if (hom + (n * L - ext1) != (n + 1) * L)
        throw math_error("tangent_ext_dims: rank bookkeeping violated");
    return {hom, ext1};
}

DeformParams DeformParams::zero(const MonomialIdealSpec& spec) {
    DeformParams p;
    for (int ti : spec.t) {
        p.b.emplace_back(ti, FieldElem(0));
        p.a.emplace_back(ti, FieldElem(0));
    }
    return p;
}

DeformParams DeformParams::sample(const MonomialIdealSpec& spec, Rng& rng, const Field& field) {
    DeformParams p;
    for (int ti : spec.t) {
        std::vector<FieldElem> brow, arow;
        for (int j = 0; j < ti; ++j) {
            brow.push_back(rng.small(field));
            arow.push_back(rng.small(field));
        }
        p.b.push_back(std::move(brow));
        p.a.push_back(std::move(arow));
    }
    return p;
}

DeformParams DeformParams::from_json(const nlohmann::json& j, const MonomialIdealSpec& spec,
                                     const Field& field) {
    DeformParams p = zero(spec);
    auto load = [&](const char* key, std::vector<std::vector<FieldElem>>& dst) {
        if (!j.contains(key)) return;
        const auto& rows = j.at(key);
        for (std::size_t i = 0; i < rows.size() && i < dst.size(); ++i)
            for (std::size_t k = 0; k < rows[i].size() && k < dst[i].size(); ++k) {
                const auto& v = rows[i][k];
                dst[i][k] = v.is_string() ? parse_field_elem(v.get<std::string>(), field)
                                          : FieldElem::in_field(v.get<long>(), field);
            }
    };
    load("b", p.b);
    load("a", p.a);
    p.validate(spec);
    return p;
}

void DeformParams::validate(const MonomialIdealSpec& spec) const {
    if (static_cast<int>(b.size()) != spec.n() || static_cast<int>(a.size()) != spec.n())
        throw math_error("deform: parameter blocks do not match the spec");
    for (int i = 0; i < spec.n(); ++i)
        if (static_cast<int>(b[i].size()) != spec.t[i] ||
            static_cast<int>(a[i].size()) != spec.t[i])
            throw math_error("deform: block " + std::to_string(i + 1) +
                             " must hold t_i coefficients");
}

Mat<MPoly> deformed_matrix(const MonomialIdealSpec& spec, const DeformParams& p) {
    p.validate(spec);
    const int n = spec.n();
    Mat<MPoly> M = det_matrix(spec);
    MPoly x = MPoly::variable("x");
    for (int i = 0; i < n; ++i) {
        MPoly tail;
        for (int j = 0; j < spec.t[i]; ++j)
            tail += x.pow(static_cast<unsigned>(j)).scaled(p.b[i][j]);
        M.at(i, i) += tail;
        MPoly f;
        for (int j = 0; j < spec.t[i]; ++j)
            f += x.pow(static_cast<unsigned>(j)).scaled(p.a[i][j]);
        M.at(i, n) += f;
    }
    return M;
}

bi::BiIdeal deform(const MonomialIdealSpec& spec, const DeformParams& p) {
    const int n = spec.n();
    Mat<MPoly> M = deformed_matrix(spec, p);
    std::vector<MPoly> minors;
    for (int del = 0; del < n + 1; ++del) {
        Mat<MPoly> sub(n, n);
        for (int r = 0; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n + 1; ++c) {
                if (c == del) continue;
                sub.at(r, cc++) = M.at(r, c);
            }
        }
        minors.push_back(det_cofactor(sub));
    }
    return bi::BiIdeal(std::move(minors));
}

uni::StratPoint restrict_x_axis_point(const MonomialIdealSpec& spec, const DeformParams& p) {
    p.validate(spec);
    if (spec.sum_t() == 0) throw math_error("restrict_x_axis: sum t = 0, no x-direction");
    std::vector<int> shape;
    std::vector<std::vector<FieldElem>> b, a;
    for (int i = 0; i < spec.n(); ++i) {
        if (spec.t[i] == 0) continue;  // h_i = 1, f_i = 0: contributes nothing
        shape.push_back(spec.t[i]);
        b.push_back(p.b[i]);
        a.push_back(p.a[i]);
    }
    uni::StratPoint pt{uni::Shape(shape), std::move(b), std::move(a)};
    pt.validate();
    return pt;
}

uni::AssembledTuple restrict_x_axis(const MonomialIdealSpec& spec, const DeformParams& p) {
    return uni::assemble(restrict_x_axis_point(spec, p));
}

}  // namespace strata::model
