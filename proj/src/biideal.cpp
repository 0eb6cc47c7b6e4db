#include "strata/biideal.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>

#include "strata/poly1.hpp"

namespace strata::bi {

MonomialOrder MonomialOrder::weighted(long wx, long wy, bool y_major) {
    if (wx < 0 || wy < 0 || (wx == 0 && wy == 0))
        throw math_error("order: weights must be nonnegative and not both zero");
    return {Kind::weighted, wx, wy, y_major};
}

bool MonomialOrder::less(unsigned ax, unsigned ay, unsigned bx, unsigned by) const {
    if (kind == Kind::weighted) {
        long wa = wx * static_cast<long>(ax) + wy * static_cast<long>(ay);
        long wb = wx * static_cast<long>(bx) + wy * static_cast<long>(by);
        if (wa != wb) return wa < wb;
    }
    if (y_major) {
        if (ay != by) return ay < by;
        return ax < bx;
    }
    if (ax != bx) return ax < bx;
    return ay < by;
}

std::string MonomialOrder::key() const {
    std::ostringstream os;
    os << (kind == Kind::lex ? "lex" : "w" + std::to_string(wx) + "," + std::to_string(wy))
       << (y_major ? ":y>x" : ":x>y");
    return os.str();
}

namespace {

// Internal dense-exponent form of a bivariate polynomial.
using Key = std::array<unsigned, 2>;  // {x exp, y exp}
using BP = std::map<Key, FieldElem>;

BP from_mpoly(const MPoly& p) {
    MPoly q = p.with_vars({"x", "y"});
    for (const auto& v : q.vars())
        if (v != "x" && v != "y" && q.degree_in(v) > 0)
            throw math_error("biideal: generator has variable '" + v + "' outside k[x,y]");
    std::size_t xi = 0, yi = 0;
    const auto& vars = q.vars();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == "x") xi = i;
        if (vars[i] == "y") yi = i;
    }
    BP out;
    for (const auto& [e, c] : q.terms()) out[{e[xi], e[yi]}] = c;
    return out;
}

MPoly to_mpoly(const BP& p) {
    MPoly acc;
    for (const auto& [e, c] : p) {
        MPoly t = MPoly::monomial({"x", "y"}, {e[0], e[1]}, c);
        acc += t;
    }
    return acc.with_vars({"x", "y"});
}

void add_term(BP& p, const Key& k, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = p.find(k);
    if (it == p.end()) {
        p.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

// p += c * x^dx y^dy * q
void add_scaled_shifted(BP& p, const BP& q, const FieldElem& c, const Key& shift) {
    for (const auto& [e, cc] : q) add_term(p, {e[0] + shift[0], e[1] + shift[1]}, c * cc);
}

std::pair<Key, FieldElem> lead(const BP& p, const MonomialOrder& o) {
    if (p.empty()) throw math_error("biideal: zero polynomial has no lead term");
    auto best = p.begin();
    for (auto it = std::next(p.begin()); it != p.end(); ++it)
        if (o.less(best->first[0], best->first[1], it->first[0], it->first[1])) best = it;
    return {best->first, best->second};
}

bool divides(const Key& a, const Key& b) {
    return a[0] <= b[0] && a[1] <= b[1];
}

BP scaled(const BP& p, const FieldElem& c) {
    BP out;
    for (const auto& [e, cc] : p) out.emplace(e, cc * c);
    return out;
}

// Full normal form: every term of the result lies outside the lead ideal.
BP normal_form(BP f, const std::vector<BP>& basis, const std::vector<Key>& leads,
               const MonomialOrder& o) {
    BP r;
    while (!f.empty()) {
        auto [lt, lc] = lead(f, o);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!divides(leads[i], lt)) continue;
            // basis entries are monic
            add_scaled_shifted(f, basis[i], -lc, {lt[0] - leads[i][0], lt[1] - leads[i][1]});
            reduced = true;
            break;
        }
        if (!reduced) {
            add_term(r, lt, lc);
            f.erase(lt);
        }
    }
    return r;
}

std::vector<BP> buchberger_bp(std::vector<BP> gens, const MonomialOrder& o) {
    std::vector<BP> basis;
    std::vector<Key> leads;
    for (auto& g : gens) {
        if (g.empty()) continue;
        auto [lt, lc] = lead(g, o);
        basis.push_back(scaled(g, lc.inv()));
        leads.push_back(lt);
    }
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        Key lcm{std::max(leads[i][0], leads[j][0]), std::max(leads[i][1], leads[j][1])};
        // Coprime lead terms reduce to zero (Buchberger's first criterion).
        if (lcm[0] == leads[i][0] + leads[j][0] && lcm[1] == leads[i][1] + leads[j][1]) continue;
        BP s;
        add_scaled_shifted(s, basis[i], FieldElem(1), {lcm[0] - leads[i][0], lcm[1] - leads[i][1]});
        add_scaled_shifted(s, basis[j], FieldElem(-1), {lcm[0] - leads[j][0], lcm[1] - leads[j][1]});
        BP r = normal_form(std::move(s), basis, leads, o);
        if (r.empty()) continue;
        auto [lt, lc] = lead(r, o);
        basis.push_back(scaled(r, lc.inv()));
        leads.push_back(lt);
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }
    // Minimalize: drop entries whose lead is divisible by another lead.
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[i] || !keep[j]) continue;
            if (divides(leads[j], leads[i]) && leads[j] != leads[i]) {
                keep[i] = false;
            } else if (leads[j] == leads[i] && j < i) {
                keep[i] = false;
            }
        }
    std::vector<BP> minimal;
    std::vector<Key> minleads;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) {
            minimal.push_back(basis[i]);
            minleads.push_back(leads[i]);
        }
    // Fully reduce each element against the others.
    std::vector<BP> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<BP> others;
        std::vector<Key> oleads;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) {
                others.push_back(minimal[j]);
                oleads.push_back(minleads[j]);
            }
        BP r = normal_form(minimal[i], others, oleads, o);
        if (!r.empty()) {
            auto [lt, lc] = lead(r, o);
            reduced.push_back(scaled(r, lc.inv()));
        }
    }
    std::sort(reduced.begin(), reduced.end(), [&](const BP& a, const BP& b) {
        auto la = lead(a, o).first, lb = lead(b, o).first;
        return o.less(la[0], la[1], lb[0], lb[1]);
    });
    return reduced;
}

std::optional<long> staircase_count(const std::vector<Key>& leads) {
    // Finite iff a pure x power and a pure y power appear.
    unsigned purex = 0;
    bool have_purex = false;
    for (const auto& k : leads)
        if (k[1] == 0) {
            purex = have_purex ? std::min(purex, k[0]) : k[0];
            have_purex = true;
        }
    bool have_purey = std::any_of(leads.begin(), leads.end(),
                                  [](const Key& k) { return k[0] == 0; });
    if (!have_purex || !have_purey) return std::nullopt;
    long count = 0;
    for (unsigned a = 0; a < purex; ++a) {
        unsigned bound = 0;
        bool first = true;
        for (const auto& k : leads) {
            if (k[0] > a) continue;
            bound = first ? k[1] : std::min(bound, k[1]);
            first = false;
        }
        count += bound;
    }
    return count;
}

}  // namespace

std::vector<MPoly> buchberger(const std::vector<MPoly>& gens, const MonomialOrder& o) {
    std::vector<BP> in;
    in.reserve(gens.size());
    for (const auto& g : gens) in.push_back(from_mpoly(g));
    std::vector<BP> out = buchberger_bp(std::move(in), o);
    std::vector<MPoly> res;
    res.reserve(out.size());
    for (const auto& b : out) res.push_back(to_mpoly(b));
    return res;
}

BiIdeal::BiIdeal(std::vector<MPoly> gens) {
    for (auto& g : gens)
        if (!g.is_zero()) gens_.push_back(g.with_vars({"x", "y"}));
    for (const auto& g : gens_) from_mpoly(g);  // validates the variable set
}

const std::vector<MPoly>& BiIdeal::groebner(const MonomialOrder& o) const {
    auto it = gb_.find(o.key());
    if (it != gb_.end()) return it->second;
    auto basis = buchberger(gens_, o);
    return gb_.emplace(o.key(), std::move(basis)).first->second;
}

std::optional<long> BiIdeal::colength(const MonomialOrder& o) const {
    const auto& basis = groebner(o);
    if (basis.empty()) return std::nullopt;  // zero ideal
    std::vector<Key> leads;
    for (const auto& b : basis) leads.push_back(lead(from_mpoly(b), o).first);
    return staircase_count(leads);
}

bool BiIdeal::contains(const MPoly& f, const MonomialOrder& o) const {
    const auto& basis = groebner(o);
    std::vector<BP> bs;
    std::vector<Key> leads;
    for (const auto& b : basis) {
        bs.push_back(from_mpoly(b));
        leads.push_back(lead(bs.back(), o).first);
    }
    return normal_form(from_mpoly(f), bs, leads, o).empty();
}

bool BiIdeal::supported_at_origin() const {
    auto L = colength();
    if (!L) return false;
    unsigned n = static_cast<unsigned>(*L);
    MPoly xn = MPoly::variable("x").pow(n), yn = MPoly::variable("y").pow(n);
    return contains(xn) && contains(yn);
}

bool BiIdeal::equals(const BiIdeal& other) const {
    return groebner() == other.groebner();
}

std::string BiIdeal::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].str();
    os << ")";
    return os.str();
}

BiIdeal gm_limit(const BiIdeal& I) {
    auto L = I.colength();
    if (!L) throw math_error("gm_limit: ideal does not have finite colength");
    if (!I.supported_at_origin())
        throw math_error("gm_limit: ideal is not supported at the origin");
    const long colen = *L;

    // Degree window: products of the graded basis up to degree D span the
    // ideal there, and every lowest-y-weight form is generated by in-forms of
    // elements of degree <= 2L (the quotient contains m^L).
    const auto& basis = I.groebner(MonomialOrder::graded());
    unsigned D = static_cast<unsigned>(2 * colen + 2);
    for (const auto& b : basis) D = std::max(D, static_cast<unsigned>(b.total_degree()));

    // Echelonize all monomial multiples by their trailing term, where
    // "trailing" is minimal in (y-degree, then x-degree).
    std::map<Key, BP> rows;  // trailing (y,x) -> row, monic at the trailing term
    auto trailing = [](const BP& p) {
        auto best = p.begin();
        for (auto it = std::next(p.begin()); it != p.end(); ++it) {
            Key a = it->first, b = best->first;
            if (a[1] != b[1] ? a[1] < b[1] : a[0] < b[0]) best = it;
        }
        return best;
    };
    for (const auto& b : basis) {
        BP bp = from_mpoly(b);
        unsigned dg = static_cast<unsigned>(b.total_degree());
        for (unsigned dx = 0; dx + dg <= D; ++dx)
            for (unsigned dy = 0; dx + dy + dg <= D; ++dy) {
                BP row;
                add_scaled_shifted(row, bp, FieldElem(1), {dx, dy});
                while (!row.empty()) {
                    auto tit = trailing(row);
                    Key tk{tit->first[1], tit->first[0]};  // (y, x) for map order
                    FieldElem coef = tit->second;
                    auto hit = rows.find(tk);
                    if (hit == rows.end()) {
                        rows.emplace(tk, scaled(row, coef.inv()));
                        break;
                    }
                    add_scaled_shifted(row, hit->second, -coef, {0, 0});
                }
            }
    }

    // Lowest y-slice of each echelon row generates the limit.
    std::vector<MPoly> slices;
    for (const auto& [tk, row] : rows) {
        unsigned s = tk[0];
        BP slice;
        for (const auto& [e, c] : row)
            if (e[1] == s) slice.emplace(e, c);
        slices.push_back(to_mpoly(slice));
    }
    BiIdeal J(buchberger(slices, MonomialOrder::graded()));
    auto LJ = J.colength();
    if (!LJ || *LJ != colen)
        throw math_error("gm_limit: flat limit lost colength (window too small?)");
    return J;
}

BiIdeal monomialize(const BiIdeal& I) {
    std::vector<MPoly> out;
    for (const auto& g : I.gens()) {
        BP p = from_mpoly(g);
        if (p.empty()) continue;
        unsigned s = p.begin()->first[1];
        unsigned ordx = p.begin()->first[0];
        for (const auto& [e, c] : p) {
            if (e[1] != s)
                throw math_error("monomialize: generator " + g.str() + " is not y-homogeneous");
            ordx = std::min(ordx, e[0]);
        }
        out.push_back(MPoly::monomial({"x", "y"}, {ordx, s}, FieldElem(1)));
    }
    BiIdeal J((std::vector<MPoly>(out)));
    auto li = I.colength(), lj = J.colength();
    if (li.has_value() != lj.has_value() || (li && *li != *lj))
        throw math_error("monomialize: colength changed");
    return J;
}

std::vector<MPoly> restrict_to_x_axis(const BiIdeal& I) {
    std::map<std::string, MPoly> sub{{"y", MPoly(0)}};
    std::vector<MPoly> out;
    for (const auto& g : I.gens()) out.push_back(g.substitute_partial(sub));
    return out;
}

long incidence_colength(const BiIdeal& I, bool total_degree) {
    std::vector<UPoly> restr;
    for (const auto& g : restrict_to_x_axis(I)) {
        if (g.is_zero()) continue;
        UPoly u("x");
        MPoly gx = g.with_vars({"x"});
        std::size_t xi = 0;
        for (std::size_t i = 0; i < gx.vars().size(); ++i)
            if (gx.vars()[i] == "x") xi = i;
        for (const auto& [e, c] : gx.terms())
            u = u + UPoly::monomial("x", e.empty() ? 0 : e[xi], c);
        restr.push_back(std::move(u));
    }
    if (restr.empty()) {
        // I is contained in (y): report the full colength of I + (y).
        std::vector<MPoly> gens = I.gens();
        gens.push_back(MPoly::variable("y"));
        auto c = BiIdeal(std::move(gens)).colength();
        if (!c) throw math_error("incidence_colength: I + (y) has infinite colength");
        return *c;
    }
    UPoly g = gcd_list(restr);
    if (total_degree) return static_cast<long>(*g.degree());
    for (std::size_t i = 0; i < g.size(); ++i)
        if (!g.coeff(i).is_zero()) return static_cast<long>(i);
    return 0;
}

}  // namespace strata::bi
