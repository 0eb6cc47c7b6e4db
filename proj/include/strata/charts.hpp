#pragma once

#include <map>
#include <string>
#include <vector>

#include "strata/mpoly.hpp"
#include "strata/poly1.hpp"
#include "strata/rng.hpp"
#include "strata/unistrata.hpp"

namespace strata::charts {

// Which remainder feeds the stratum equations: the literal recursion
// f^{l+1} = Rem(h, f^l), or the Euclidean variant f^{l+1} = Rem(f^{l-1}, f^l).
// Chart coordinate changes always come from the normalized Euclidean chain,
// whose coefficient system is unit-triangular.
enum class Recursion { paper, euclid };

std::string to_string(Recursion r);

struct ChartLevel {
    int level;                 // 1-based step number
    int index;                 // 1-based tuple index stepped
    int stratum;               // the stratum I^j this step blew up: j = m - level + 1
    std::string exceptional;   // fresh chart coordinate equal to the chosen
                               // leading remainder coefficient
    std::vector<std::string> ratio_names;            // fresh ratio coordinates
    std::vector<std::pair<int, int>> ratio_tags;     // (index, coeff) per ratio
};

// One division identity h = q*f_prev + f_new (or the Euclidean dividend),
// recorded symbolically at step time in the new chart coordinates.
struct DivisionRecord {
    int level;
    int index;
    Recursion recursion;
    Poly1<RationalFunc> dividend, divisor, quotient, remainder;
    bool identity_ok;
};

// State of an iterated stratified-blowup chart tower over A(m_1,...,m_n).
// Every chart has exactly 2m coordinates; after l steps the remainder at
// index k has m^l_k coefficients and sum_k m^l_k = m - l.
class ChartTower {
public:
    explicit ChartTower(uni::Shape shape, Recursion rec = Recursion::paper);

    const uni::Shape& shape() const { return shape_; }
    int m() const { return shape_.total(); }
    int levels() const { return static_cast<int>(levels_.size()); }
    int next_stratum() const { return m() - levels(); }
    Recursion recursion() const { return rec_; }

    ChartTower with_recursion(Recursion r) const {
        ChartTower t = *this;
        t.rec_ = r;
        return t;
    }

    const std::vector<std::string>& coords() const { return coords_; }
    const std::vector<std::string>& exceptional_coords() const { return exceptional_; }
    const std::vector<int>& current_degrees() const { return deg_; }
    const std::vector<ChartLevel>& level_info() const { return levels_; }
    const std::vector<DivisionRecord>& divisions() const { return records_; }

    // Blows up the current deepest stratum in the chart where the leading
    // coefficient of the remainder at the given index is inverted.
    void step(int index_1based);

    // Defining equations of the proper transform of I^j in this chart;
    // requires j = m - levels (the next stratum).
    std::vector<RationalFunc> proper_transform_equations(int j) const;

    // Normalized center equations (Euclidean presentation), the functions
    // whose vanishing locus the next step blows up.
    std::vector<RationalFunc> center_equations() const;

    // Coefficients of the current remainder at a 0-based index, per the
    // active recursion, padded to m^l_k entries.
    std::vector<RationalFunc> remainder_coefficients(int k) const;

    // Current remainder polynomials at a 0-based index.
    const Poly1<MPoly>& center_poly(int k) const { return center_[k]; }
    Poly1<RationalFunc> current_remainder(int k, Recursion r) const;
    Poly1<MPoly> h_current(int k) const;
    int steps_at(int k) const { return steps_[k]; }

    // Original coordinates a_{i,j}, b_{i,j} as polynomials in chart coords.
    const std::map<std::string, MPoly>& blowdown_map() const { return down_; }
    // Per-level substitution of old chart coordinates by new ones.
    const std::vector<std::map<std::string, MPoly>>& sigmas() const { return sigmas_; }
    uni::StratPoint downstairs(const std::map<std::string, FieldElem>& point) const;

    // A chart point on the center of the next blowup; exceptional_zero
    // chooses which earlier exceptional divisors the point also lies on.
    std::map<std::string, FieldElem> sample_center_point(
        Rng& rng, const Field& field, const std::vector<bool>& exceptional_zero) const;

    // A plain chart point with prescribed exceptional vanishing.
    std::map<std::string, FieldElem> sample_chart_point(
        Rng& rng, const Field& field, const std::vector<bool>& exceptional_zero) const;

private:
    uni::Shape shape_;
    Recursion rec_;
    std::vector<std::string> coords_;       // sorted
    std::vector<std::string> exceptional_;  // e1, e2, ... in level order
    std::map<std::string, MPoly> down_;
    std::vector<Poly1<MPoly>> center_;      // stripped Euclidean remainders
    std::vector<Poly1<RationalFunc>> paper_center_;  // stripped paper-chain remainders
    std::vector<std::vector<Poly1<MPoly>>> monicG_;      // per index: G^0, G^1, ...
    std::vector<std::vector<Poly1<MPoly>>> lit_euclid_;  // per index: f^0, r^1, r^2, ...
    std::vector<std::vector<Poly1<RationalFunc>>> lit_paper_;  // f^0, p^1, p^2, ...
    std::vector<int> deg_;                  // m^l_k
    std::vector<int> steps_;
    std::vector<ChartLevel> levels_;
    std::vector<DivisionRecord> records_;
    std::vector<std::map<std::string, MPoly>> sigmas_;  // per level: old -> new

    Poly1<MPoly> strip_exceptional_content(Poly1<MPoly> p) const;
    Poly1<RationalFunc> strip_exceptional_content_rf(Poly1<RationalFunc> p) const;
    void check_invariants() const;
};

// The divisor branches visible in a chart: one exceptional equation per
// level (a single chart coordinate each) and, below full depth, the
// defining equations of the next stratum's proper transform, keyed by
// stratum index. All equations are regular on the chart.
struct DivisorSet {
    std::vector<std::pair<int, RationalFunc>> exceptional;         // (stratum, equation)
    std::vector<std::pair<int, std::vector<RationalFunc>>> proper; // (stratum, equations)
};

DivisorSet divisor_set(const ChartTower& t);

// --- verification -----------------------------------------------------------

struct PointVerdict {
    std::size_t expected = 0;  // number of equations / vanishing branches
    std::size_t rank = 0;
    bool equations_vanish = true;
    bool ok = false;
    std::string note;
};

struct SmoothnessReport {
    int stratum = 0;
    std::size_t n_equations = 0;
    bool no_points_found = false;
    std::vector<PointVerdict> points;
    bool all_ok() const;
    std::string summary() const;
};

// Samples rational points on the proper transform of the next stratum and
// checks that the Jacobian of its defining equations has full rank there.
SmoothnessReport check_smoothness(const ChartTower& t, int j, int samples, Rng& rng,
                                  const Field& field = Field::rationals());

struct NormalCrossingsReport {
    bool no_points_found = false;
    std::vector<PointVerdict> points;
    bool symbolic_applicable = false;
    bool symbolic_ok = true;
    std::string symbolic_note;
    bool all_ok() const;
    std::string summary() const;
};

// At sampled points of the total transform, the differentials of exactly the
// vanishing divisor branches must be independent. On small shapes this also
// verifies symbolically that exceptional equations are single chart
// coordinates and that a codimension-one proper-transform branch has a fresh
// coordinate as differential at the chart origin.
NormalCrossingsReport check_normal_crossings(const ChartTower& t, int j, int samples, Rng& rng,
                                             const Field& field = Field::rationals());

struct BlowdownReport {
    int points_checked = 0;
    int retries = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty() && points_checked > 0; }
    std::string summary() const;
};

// Blowdown compatibility: the colength of the image of a sampled chart point
// equals the deepest stratum whose divisor branches pass through the point.
BlowdownReport check_blowdown(const ChartTower& t, int samples, Rng& rng,
                              const Field& field = Field::rationals());

// All step sequences (index words) that take a shape to full depth.
std::vector<std::vector<int>> full_step_sequences(const uni::Shape& shape);

}  // namespace strata::charts
