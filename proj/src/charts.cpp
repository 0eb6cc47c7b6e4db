#include "strata/charts.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "strata/linalg.hpp"

namespace strata::charts {

std::string to_string(Recursion r) {
    return r == Recursion::paper ? "paper" : "euclid";
}

namespace {

RationalFunc rf(const MPoly& p) {
    return RationalFunc(p);
}

Poly1<RationalFunc> as_rf(const Poly1<MPoly>& p) {
    return p.map([](const MPoly& c) { return RationalFunc(c); });
}

}  // namespace

ChartTower::ChartTower(uni::Shape shape, Recursion rec) : shape_(std::move(shape)), rec_(rec) {
    const int n = shape_.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < shape_.m[i]; ++j) {
            coords_.push_back(uni::a_name(i + 1, j));
            coords_.push_back(uni::b_name(i + 1, j));
        }
    std::sort(coords_.begin(), coords_.end());
    for (const auto& c : coords_) down_.emplace(c, MPoly::variable(c));
    for (int i = 0; i < n; ++i) {
        std::vector<MPoly> fc;
        for (int j = 0; j < shape_.m[i]; ++j) fc.push_back(MPoly::variable(uni::a_name(i + 1, j)));
        Poly1<MPoly> f("x", fc);
        center_.push_back(f);
        paper_center_.push_back(as_rf(f));
        lit_euclid_.push_back({f});
        lit_paper_.push_back({as_rf(f)});
        monicG_.emplace_back();
        deg_.push_back(shape_.m[i]);
        steps_.push_back(0);
    }
    check_invariants();
}

Poly1<MPoly> ChartTower::h_current(int k) const {
    std::vector<MPoly> hc;
    for (int j = 0; j < shape_.m[k]; ++j) hc.push_back(down_.at(uni::b_name(k + 1, j)));
    hc.push_back(MPoly(1));
    return Poly1<MPoly>("x", std::move(hc));
}

Poly1<MPoly> ChartTower::strip_exceptional_content(Poly1<MPoly> p) const {
    if (p.is_zero()) return p;
    for (const auto& e : exceptional_) {
        unsigned k = 0;
        bool first = true;
        for (const auto& c : p.coeffs()) {
            if (c.is_zero()) continue;
            unsigned o = c.min_exponent(e);
            k = first ? o : std::min(k, o);
            first = false;
        }
        if (!first && k > 0)
            p = p.map([&](const MPoly& c) {
                return c.is_zero() ? c : c.divide_by_power(e, k);
            });
    }
    return p;
}

Poly1<RationalFunc> ChartTower::strip_exceptional_content_rf(Poly1<RationalFunc> p) const {
    if (p.is_zero()) return p;
    for (const auto& e : exceptional_) {
        long k = 0;
        bool first = true;
        for (const auto& c : p.coeffs()) {
            if (c.is_zero()) continue;
            long o = static_cast<long>(c.num().min_exponent(e)) -
                     static_cast<long>(c.den().min_exponent(e));
            k = first ? o : std::min(k, o);
            first = false;
        }
        if (!first && k > 0) {
            RationalFunc divisor(MPoly::variable(e).pow(static_cast<unsigned>(k)));
            p = p.map([&](const RationalFunc& c) { return c.is_zero() ? c : c / divisor; });
        }
    }
    return p;
}

void ChartTower::check_invariants() const {
    if (static_cast<int>(coords_.size()) != 2 * m())
        throw math_error("chart tower: coordinate count is not 2m");
    int total = 0;
    for (int d : deg_) total += d;
    if (total != m() - levels()) throw math_error("chart tower: degree accounting broken");
    for (std::size_t k = 0; k < center_.size(); ++k) {
        if (deg_[k] == 0) {
            if (!center_[k].is_zero())
                throw math_error("chart tower: exhausted index still has a remainder");
        } else if (static_cast<int>(center_[k].size()) != deg_[k]) {
            throw math_error("chart tower: remainder at index " + std::to_string(k + 1) +
                             " degenerated (leading coefficient vanished identically)");
        }
    }
}

void ChartTower::step(int index_1based) {
    const int k = index_1based - 1;
    if (k < 0 || k >= shape_.n()) throw math_error("blowup_step: index out of range");
    if (deg_[k] < 1)
        throw math_error("blowup_step: m^l = 0 at index " + std::to_string(index_1based) +
                         ", no further blowup there");
    const int lvl = levels() + 1;
    const std::string ename = "e" + std::to_string(lvl);

    // Relations c = e or c = e * u for the center functions c.
    struct Rel {
        MPoly lhs, rhs;
    };
    std::vector<Rel> rels;
    std::vector<std::string> ratio_names;
    std::vector<std::pair<int, int>> ratio_tags;
    const MPoly evar = MPoly::variable(ename);
    for (int q = 0; q < shape_.n(); ++q) {
        for (int j = deg_[q] - 1; j >= 0; --j) {
            MPoly c = center_[q].coeff(j);
            if (c.is_zero())
                throw math_error("blowup_step: center equation (" + std::to_string(q + 1) + "," +
                                 std::to_string(j) + ") vanishes identically");
            if (q == k && j == deg_[k] - 1) {
                rels.push_back({std::move(c), evar});
            } else {
                std::string rn = "u" + std::to_string(lvl) + "_" + std::to_string(q + 1) + "_" +
                                 std::to_string(j);
                ratio_names.push_back(rn);
                ratio_tags.emplace_back(q + 1, j);
                rels.push_back({std::move(c), evar * MPoly::variable(rn)});
            }
        }
    }

    // Unit-pivot triangular elimination for the coordinate change.
    std::set<std::string> blocked(exceptional_.begin(), exceptional_.end());
    std::set<std::string> old_coords(coords_.begin(), coords_.end());
    std::vector<std::pair<std::string, MPoly>> solved;
    std::vector<Rel> remaining = rels;
    while (!remaining.empty()) {
        bool progress = false;
        for (std::size_t ri = 0; ri < remaining.size() && !progress; ++ri) {
            MPoly lhs = remaining[ri].lhs.pruned();
            for (const auto& v : lhs.vars()) {
                if (!old_coords.count(v) || blocked.count(v)) continue;
                if (lhs.degree_in(v) != 1) continue;
                MPoly A = lhs.diff(v);
                if (A.is_zero() || !A.is_constant()) continue;
                MPoly B = lhs.substitute_partial({{v, MPoly(0)}});
                MPoly expr = (remaining[ri].rhs - B).scaled(A.constant_value().inv());
                solved.emplace_back(v, expr);
                blocked.insert(v);
                remaining.erase(remaining.begin() + static_cast<long>(ri));
                for (auto& r2 : remaining) r2.lhs = r2.lhs.substitute_partial({{v, expr}});
                progress = true;
                break;
            }
        }
        if (!progress) {
            std::ostringstream os;
            os << "blowup_step: center equations are not unit-triangular at level " << lvl
               << " (index " << index_1based << "); stuck on:";
            for (const auto& r : remaining) os << " [" << r.lhs.str() << "]";
            throw math_error(os.str());
        }
    }
    std::map<std::string, MPoly> sigma;
    for (auto it = solved.rbegin(); it != solved.rend(); ++it)
        sigma[it->first] = it->second.substitute_partial(sigma);
    for (const auto& r : rels)
        if (!(r.lhs.substitute_partial(sigma) == r.rhs))
            throw math_error("blowup_step: chart relation does not hold after substitution");

    // New coordinate set.
    std::vector<std::string> newcoords;
    for (const auto& c : coords_)
        if (!sigma.count(c)) newcoords.push_back(c);
    newcoords.push_back(ename);
    for (const auto& rn : ratio_names) newcoords.push_back(rn);
    std::sort(newcoords.begin(), newcoords.end());

    // Re-express all state through sigma.
    std::map<std::string, RationalFunc> sigma_rf;
    for (const auto& c : coords_) {
        auto it = sigma.find(c);
        sigma_rf.emplace(c, it == sigma.end() ? RationalFunc(MPoly::variable(c))
                                              : RationalFunc(it->second));
    }
    auto push_poly = [&](Poly1<MPoly>& p) {
        p = p.map([&](const MPoly& c) { return c.substitute_partial(sigma); });
    };
    auto push_poly_rf = [&](Poly1<RationalFunc>& p) {
        p = p.map([&](const RationalFunc& c) { return c.substitute(sigma_rf); });
    };
    for (auto& [name, v] : down_) v = v.substitute_partial(sigma);
    for (auto& chain : monicG_)
        for (auto& g : chain) push_poly(g);
    for (auto& chain : lit_euclid_)
        for (auto& g : chain) push_poly(g);
    for (auto& chain : lit_paper_)
        for (auto& g : chain) push_poly_rf(g);

    coords_ = std::move(newcoords);
    exceptional_.push_back(ename);
    for (int q = 0; q < shape_.n(); ++q) {
        if (q == k) continue;
        push_poly(center_[q]);
        center_[q] = strip_exceptional_content(center_[q]);
        push_poly_rf(paper_center_[q]);
        paper_center_[q] = strip_exceptional_content_rf(paper_center_[q]);
    }

    // Monic divisor in the new chart: x^delta + sum of ratio coordinates.
    const int delta = deg_[k] - 1;
    Poly1<MPoly> G("x");
    if (delta == 0) {
        G = Poly1<MPoly>::constant("x", MPoly(1));
    } else {
        std::vector<MPoly> gc;
        for (int j = 0; j < delta; ++j)
            gc.push_back(MPoly::variable("u" + std::to_string(lvl) + "_" +
                                         std::to_string(k + 1) + "_" + std::to_string(j)));
        gc.push_back(MPoly(1));
        G = Poly1<MPoly>("x", std::move(gc));
    }
    monicG_[k].push_back(G);
    steps_[k] += 1;
    const int d = steps_[k];
    deg_[k] = delta;

    const Poly1<MPoly> h_k = h_current(k);
    // Euclidean chain: f^d = Rem(f^{d-2}, f^{d-1}); dividend f^{-1} is h.
    const Poly1<MPoly> lit_e_dividend = (d == 1) ? h_k : lit_euclid_[k][d - 2];
    const Poly1<MPoly> lit_e_divisor = lit_euclid_[k][d - 1];
    Poly1<MPoly> r_euclid = divrem_monic(lit_e_dividend, G).second;
    // Paper chain: f^d = Rem(h, f^{d-1}).
    const Poly1<RationalFunc> paper_divisor = lit_paper_[k][d - 1];
    auto [pq, pr] = divrem(as_rf(h_k), paper_divisor);

    // Center presentation from the monic chain.
    const Poly1<MPoly> monic_dividend = (d == 1) ? h_k : monicG_[k][d - 2];
    center_[k] = strip_exceptional_content(divrem_monic(monic_dividend, G).second);

    // Division identity records, both recursions.
    {
        DivisionRecord rec{lvl, index_1based, Recursion::paper, as_rf(h_k), paper_divisor, pq, pr,
                           false};
        rec.identity_ok = (rec.quotient * rec.divisor + rec.remainder == rec.dividend);
        records_.push_back(std::move(rec));
        auto [eq, er] = divrem(as_rf(lit_e_dividend), as_rf(lit_e_divisor));
        DivisionRecord rec2{lvl,     index_1based, Recursion::euclid, as_rf(lit_e_dividend),
                            as_rf(lit_e_divisor), eq, er, false};
        rec2.identity_ok = (rec2.quotient * rec2.divisor + rec2.remainder == rec2.dividend);
        records_.push_back(std::move(rec2));
    }
    lit_euclid_[k].push_back(std::move(r_euclid));
    lit_paper_[k].push_back(pr);
    paper_center_[k] = strip_exceptional_content_rf(pr);

    levels_.push_back(ChartLevel{lvl, index_1based, m() - lvl + 1, ename, ratio_names, ratio_tags});
    sigmas_.push_back(std::move(sigma));
    check_invariants();
}

Poly1<RationalFunc> ChartTower::current_remainder(int k, Recursion r) const {
    if (r == Recursion::paper) return lit_paper_[k].back();
    return as_rf(lit_euclid_[k].back());
}

std::vector<RationalFunc> ChartTower::remainder_coefficients(int k) const {
    std::vector<RationalFunc> eqs;
    if (steps_[k] == 0 || rec_ == Recursion::euclid) {
        for (int c = 0; c < deg_[k]; ++c) eqs.push_back(rf(center_[k].coeff(c)));
    } else {
        for (int c = 0; c < deg_[k]; ++c) eqs.push_back(paper_center_[k].coeff(c));
    }
    return eqs;
}

std::vector<RationalFunc> ChartTower::proper_transform_equations(int j) const {
    if (j != next_stratum())
        throw math_error("proper_transform_equations: this tower presents stratum " +
                         std::to_string(next_stratum()) + ", not " + std::to_string(j));
    std::vector<RationalFunc> eqs;
    for (int k = 0; k < shape_.n(); ++k) {
        if (deg_[k] == 0) continue;
        auto part = remainder_coefficients(k);
        eqs.insert(eqs.end(), part.begin(), part.end());
    }
    return eqs;
}

std::vector<RationalFunc> ChartTower::center_equations() const {
    std::vector<RationalFunc> eqs;
    for (int k = 0; k < shape_.n(); ++k)
        for (int c = 0; c < deg_[k]; ++c) eqs.push_back(rf(center_[k].coeff(c)));
    return eqs;
}

uni::StratPoint ChartTower::downstairs(const std::map<std::string, FieldElem>& point) const {
    uni::StratPoint pt = uni::StratPoint::origin(shape_);
    for (int i = 0; i < shape_.n(); ++i)
        for (int j = 0; j < shape_.m[i]; ++j) {
            pt.a[i][j] = down_.at(uni::a_name(i + 1, j)).eval(point);
            pt.b[i][j] = down_.at(uni::b_name(i + 1, j)).eval(point);
        }
    return pt;
}

std::map<std::string, FieldElem> ChartTower::sample_chart_point(
    Rng& rng, const Field& field, const std::vector<bool>& exceptional_zero) const {
    std::map<std::string, FieldElem> pt;
    for (const auto& c : coords_) pt[c] = rng.small(field);
    for (std::size_t s = 0; s < exceptional_.size(); ++s) {
        bool zero = s < exceptional_zero.size() && exceptional_zero[s];
        pt[exceptional_[s]] = zero ? FieldElem(0) : rng.small_nonzero(field);
    }
    return pt;
}

namespace {

// Points on the center of the next blowup come from the one-step extension:
// the exceptional divisor of the extra step surjects onto the center. Built
// once and reused across samples.
class CenterSampler {
public:
    explicit CenterSampler(const ChartTower& t) : base_(t), scratch_(t) {
        if (t.next_stratum() == 0) return;
        int idx = 0;
        while (t.current_degrees()[idx] == 0) ++idx;
        scratch_.step(idx + 1);
        valid_ = true;
    }

    bool valid() const { return valid_; }

    std::map<std::string, FieldElem> sample(Rng& rng, const Field& field,
                                            const std::vector<bool>& exceptional_zero) const {
        if (!valid_) throw math_error("sample_center_point: tower is at full depth");
        const std::string& enew = scratch_.level_info().back().exceptional;
        std::map<std::string, FieldElem> nv;
        for (const auto& c : scratch_.coords()) nv[c] = rng.small(field);
        nv[enew] = FieldElem(0);
        const auto& exc = base_.exceptional_coords();
        for (std::size_t s = 0; s < exc.size(); ++s) {
            bool zero = s < exceptional_zero.size() && exceptional_zero[s];
            nv[exc[s]] = zero ? FieldElem(0) : rng.small_nonzero(field);
        }
        const auto& sigma = scratch_.sigmas().back();
        std::map<std::string, FieldElem> ov;
        for (const auto& c : base_.coords()) {
            auto it = sigma.find(c);
            ov[c] = it == sigma.end() ? nv.at(c) : it->second.eval(nv);
        }
        return ov;
    }

private:
    const ChartTower& base_;
    ChartTower scratch_;
    bool valid_ = false;
};

}  // namespace

std::map<std::string, FieldElem> ChartTower::sample_center_point(
    Rng& rng, const Field& field, const std::vector<bool>& exceptional_zero) const {
    return CenterSampler(*this).sample(rng, field, exceptional_zero);
}

DivisorSet divisor_set(const ChartTower& t) {
    DivisorSet d;
    for (const auto& lvl : t.level_info())
        d.exceptional.emplace_back(lvl.stratum, rf(MPoly::variable(lvl.exceptional)));
    if (t.next_stratum() > 0)
        d.proper.emplace_back(t.next_stratum(),
                              t.proper_transform_equations(t.next_stratum()));
    return d;
}

// --- verification -----------------------------------------------------------

namespace {

std::vector<bool> mask_bits(unsigned mask, std::size_t n) {
    std::vector<bool> out(n, false);
    for (std::size_t i = 0; i < n; ++i) out[i] = (mask >> i) & 1u;
    return out;
}

// Jacobian rows d(eq)/d(coords) evaluated at a point.
Mat<FieldElem> jacobian_at(const std::vector<RationalFunc>& eqs,
                           const std::vector<std::string>& coords,
                           const std::map<std::string, FieldElem>& pt) {
    Mat<FieldElem> J(eqs.size(), coords.size());
    for (std::size_t i = 0; i < eqs.size(); ++i)
        for (std::size_t j = 0; j < coords.size(); ++j)
            J.at(i, j) = eqs[i].diff(coords[j]).eval(pt);
    return J;
}

}  // namespace

bool SmoothnessReport::all_ok() const {
    if (no_points_found) return false;
    for (const auto& p : points)
        if (!p.ok) return false;
    return true;
}

std::string SmoothnessReport::summary() const {
    std::ostringstream os;
    os << "stratum " << stratum << ": " << n_equations << " equations";
    if (no_points_found) {
        os << ", no points found";
        return os.str();
    }
    std::size_t bad = 0;
    for (const auto& p : points)
        if (!p.ok) ++bad;
    os << ", " << points.size() << " points, " << (points.size() - bad) << " full-rank";
    if (bad) {
        os << "; first failure: ";
        for (const auto& p : points)
            if (!p.ok) {
                os << (p.equations_vanish
                           ? "rank " + std::to_string(p.rank) + " < " + std::to_string(p.expected)
                           : p.note);
                break;
            }
    }
    return os.str();
}

SmoothnessReport check_smoothness(const ChartTower& t, int j, int samples, Rng& rng,
                                  const Field& field) {
    SmoothnessReport rep;
    rep.stratum = j;
    auto eqs = t.proper_transform_equations(j);
    rep.n_equations = eqs.size();
    if (eqs.empty()) return rep;  // full depth: nothing to certify
    const std::size_t L = static_cast<std::size_t>(t.levels());
    const unsigned masks = 1u << std::min<std::size_t>(L, 8);
    CenterSampler sampler(t);
    int attempts = 0;
    const int max_attempts = samples * 10;
    while (static_cast<int>(rep.points.size()) < samples && attempts < max_attempts) {
        unsigned mask = static_cast<unsigned>(attempts) % masks;
        ++attempts;
        std::map<std::string, FieldElem> pt;
        try {
            pt = sampler.sample(rng, field, mask_bits(mask, L));
        } catch (const math_error&) {
            continue;
        }
        PointVerdict v;
        v.expected = eqs.size();
        bool rejected = false;
        for (const auto& e : eqs) {
            FieldElem val;
            try {
                val = e.eval(pt);
            } catch (const math_error& ex) {
                v.note = std::string("equation undefined at sampled point: ") + ex.what();
                rejected = true;
                break;
            }
            if (!val.is_zero()) {
                v.equations_vanish = false;
                v.note = "stratum equations do not vanish at a sampled center point";
            }
        }
        if (rejected) continue;
        if (!v.equations_vanish) {
            v.ok = false;
            rep.points.push_back(std::move(v));
            continue;
        }
        try {
            v.rank = rank_of(jacobian_at(eqs, t.coords(), pt));
        } catch (const math_error& ex) {
            continue;
        }
        v.ok = (v.rank == v.expected);
        rep.points.push_back(std::move(v));
    }
    if (rep.points.empty()) rep.no_points_found = true;
    return rep;
}

bool NormalCrossingsReport::all_ok() const {
    if (no_points_found) return false;
    if (symbolic_applicable && !symbolic_ok) return false;
    for (const auto& p : points)
        if (!p.ok) return false;
    return true;
}

std::string NormalCrossingsReport::summary() const {
    std::ostringstream os;
    if (no_points_found) {
        os << "no points found";
        return os.str();
    }
    std::size_t bad = 0;
    for (const auto& p : points)
        if (!p.ok) ++bad;
    os << points.size() << " points, " << (points.size() - bad) << " independent";
    if (symbolic_applicable) os << "; symbolic: " << (symbolic_ok ? "ok" : symbolic_note);
    return os.str();
}

NormalCrossingsReport check_normal_crossings(const ChartTower& t, int j, int samples, Rng& rng,
                                             const Field& field) {
    NormalCrossingsReport rep;
    if (t.next_stratum() > 0 && j != t.next_stratum())
        throw math_error("check_normal_crossings: this tower presents stratum " +
                         std::to_string(t.next_stratum()));
    struct Branch {
        int stratum;
        std::vector<RationalFunc> eqs;
        bool is_center;
    };
    std::vector<Branch> branches;
    DivisorSet ds = divisor_set(t);
    for (const auto& [stratum, eq] : ds.exceptional)
        branches.push_back({stratum, {eq}, false});
    const bool has_center = !ds.proper.empty();
    for (const auto& [stratum, eqs] : ds.proper) branches.push_back({stratum, eqs, true});

    const std::size_t B = branches.size();
    const unsigned masks = 1u << std::min<std::size_t>(B, 8);
    CenterSampler sampler(t);
    int attempts = 0;
    const int max_attempts = samples * 10;
    while (static_cast<int>(rep.points.size()) < samples && attempts < max_attempts) {
        unsigned mask = static_cast<unsigned>(attempts) % masks;
        ++attempts;
        if (mask == 0 && masks > 1) continue;  // want points on at least one branch
        std::vector<bool> bits = mask_bits(mask, B);
        std::vector<bool> exc(bits.begin(), bits.begin() + t.levels());
        bool on_center = has_center && bits[B - 1];
        std::map<std::string, FieldElem> pt;
        try {
            pt = on_center ? sampler.sample(rng, field, exc)
                           : t.sample_chart_point(rng, field, exc);
        } catch (const math_error&) {
            continue;
        }
        // Observed vanishing branches.
        std::vector<RationalFunc> vanishing;
        std::size_t nvanish = 0;
        bool rejected = false;
        for (const auto& br : branches) {
            bool all_zero = true;
            for (const auto& e : br.eqs) {
                FieldElem val;
                try {
                    val = e.eval(pt);
                } catch (const math_error&) {
                    rejected = true;
                    break;
                }
                if (!val.is_zero()) {
                    all_zero = false;
                    break;
                }
            }
            if (rejected) break;
            if (all_zero) {
                ++nvanish;
                for (const auto& e : br.eqs) vanishing.push_back(e);
            }
        }
        if (rejected) continue;
        PointVerdict v;
        v.expected = vanishing.size();
        if (vanishing.empty()) {
            v.ok = true;
            v.note = "no branch through point";
            rep.points.push_back(std::move(v));
            continue;
        }
        try {
            v.rank = rank_of(jacobian_at(vanishing, t.coords(), pt));
        } catch (const math_error&) {
            continue;
        }
        v.ok = (v.rank == v.expected);
        if (!v.ok)
            v.note = "differentials of " + std::to_string(nvanish) +
                     " vanishing branches have rank " + std::to_string(v.rank);
        rep.points.push_back(std::move(v));
    }
    if (rep.points.empty()) rep.no_points_found = true;

    // Symbolic checks: exceptional equations are literal chart coordinates by
    // construction (asserted), and a codimension-one proper-transform branch
    // must have a single fresh coordinate as differential at the chart origin.
    rep.symbolic_applicable = true;
    for (const auto& e : t.exceptional_coords())
        if (std::find(t.coords().begin(), t.coords().end(), e) == t.coords().end()) {
            rep.symbolic_ok = false;
            rep.symbolic_note = "exceptional equation " + e + " is not a chart coordinate";
        }
    if (has_center && branches.back().eqs.size() == 1 && rep.symbolic_ok) {
        const RationalFunc& eq = branches.back().eqs[0];
        std::map<std::string, FieldElem> origin;
        for (const auto& c : t.coords()) origin[c] = FieldElem(0);
        std::map<std::string, FieldElem> diff;
        bool defined = true;
        for (const auto& c : t.coords()) {
            try {
                FieldElem d = eq.diff(c).eval(origin);
                if (!d.is_zero()) diff[c] = d;
            } catch (const math_error&) {
                defined = false;
                break;
            }
        }
        if (!defined) {
            rep.symbolic_ok = false;
            rep.symbolic_note = "branch equation is not regular at the chart origin";
        } else if (diff.size() != 1) {
            rep.symbolic_ok = false;
            rep.symbolic_note =
                "branch differential at origin involves " + std::to_string(diff.size()) +
                " coordinates (expected a single fresh coordinate)";
        } else {
            const std::string& c = diff.begin()->first;
            if (std::find(t.exceptional_coords().begin(), t.exceptional_coords().end(), c) !=
                t.exceptional_coords().end()) {
                rep.symbolic_ok = false;
                rep.symbolic_note = "branch differential at origin is the exceptional " + c;
            }
        }
    }
    return rep;
}

std::string BlowdownReport::summary() const {
    std::ostringstream os;
    os << points_checked << " points";
    if (retries) os << " (" << retries << " resampled)";
    if (!failures.empty()) os << "; first failure: " << failures.front();
    return os.str();
}

BlowdownReport check_blowdown(const ChartTower& t, int samples, Rng& rng, const Field& field) {
    BlowdownReport rep;
    struct Branch {
        int stratum;
        std::vector<RationalFunc> eqs;
        bool is_center;
    };
    std::vector<Branch> branches;
    for (int s = 0; s < t.levels(); ++s)
        branches.push_back(
            {t.m() - s, {rf(MPoly::variable(t.exceptional_coords()[s]))}, false});
    if (t.next_stratum() > 0)
        branches.push_back({t.next_stratum(), t.center_equations(), true});

    const std::size_t B = branches.size();
    const unsigned masks = 1u << std::min<std::size_t>(B, 8);
    CenterSampler sampler(t);
    for (int i = 0; i < samples; ++i) {
        unsigned mask = static_cast<unsigned>(i) % masks;
        bool done = false;
        for (int attempt = 0; attempt < 40 && !done; ++attempt) {
            std::vector<bool> bits = mask_bits(mask, B);
            std::vector<bool> exc(bits.begin(), bits.begin() + t.levels());
            bool on_center = t.next_stratum() > 0 && bits[B - 1];
            std::map<std::string, FieldElem> pt;
            try {
                pt = on_center ? sampler.sample(rng, field, exc)
                               : t.sample_chart_point(rng, field, exc);
            } catch (const math_error&) {
                continue;
            }
            // Deepest stratum whose branch passes through the point.
            int expected = 0;
            bool rejected = false;
            for (const auto& br : branches) {
                bool all_zero = true;
                for (const auto& e : br.eqs) {
                    FieldElem val;
                    try {
                        val = e.eval(pt);
                    } catch (const math_error&) {
                        rejected = true;
                        break;
                    }
                    if (!val.is_zero()) {
                        all_zero = false;
                        break;
                    }
                }
                if (rejected) break;
                if (all_zero) expected = std::max(expected, br.stratum);
            }
            if (rejected) continue;
            std::size_t colen = uni::colength(uni::assemble(t.downstairs(pt)));
            if (static_cast<int>(colen) == expected) {
                ++rep.points_checked;
                done = true;
            } else if (static_cast<int>(colen) > expected) {
                // Off-origin coincidence (e.g. two h_i sharing a root away
                // from the strata); resample.
                ++rep.retries;
            } else {
                rep.failures.push_back("colength " + std::to_string(colen) +
                                       " below branch level " + std::to_string(expected));
                done = true;
            }
        }
        if (!done)
            rep.failures.push_back("no clean sample for branch mask " + std::to_string(mask));
    }
    return rep;
}

std::vector<std::vector<int>> full_step_sequences(const uni::Shape& shape) {
    std::vector<std::vector<int>> out;
    std::vector<int> left = shape.m;
    std::vector<int> word;
    auto rec = [&](auto&& self) -> void {
        bool any = false;
        for (int i = 0; i < shape.n(); ++i) {
            if (left[i] == 0) continue;
            any = true;
            --left[i];
            word.push_back(i + 1);
            self(self);
            word.pop_back();
            ++left[i];
        }
        if (!any) out.push_back(word);
    };
    rec(rec);
    return out;
}

}  // namespace strata::charts
