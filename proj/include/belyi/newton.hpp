#pragma once

// Newton polygons with respect to a prime p: the lower boundary of the convex
// hull of {(i, v_p(a_i)) : a_i != 0}, its slope/length data, the root-valuation
// profile it certifies, and executable checks of the polygon lemmas.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "belyi/exactnum.hpp"
#include "belyi/poly.hpp"

namespace belyi {

struct LatticePoint {
    std::int64_t x;
    std::int64_t y;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// (i, v_p(a_i)) for each nonzero coefficient, indices strictly increasing.
using CoeffPoints = std::vector<LatticePoint>;

struct Segment {
    Rational slope;
    std::int64_t length;  // horizontal
    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Extreme points v_0 ... v_m of a lower convex chain, left to right.
/// Collinear intermediate points are never vertices.
class NewtonPolygon {
public:
    /// Lower hull of an arbitrary point set (monotone chain). Throws on an empty set.
    static NewtonPolygon lower_hull(std::vector<LatticePoint> points);
    /// Validates a vertex list: nonempty, x strictly increasing, slopes strictly increasing.
    /// Throws std::invalid_argument otherwise.
    static NewtonPolygon from_vertices(std::vector<LatticePoint> vertices);

    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    std::vector<Segment> segments() const;

    const LatticePoint& leftmost() const { return vertices_.front(); }
    const LatticePoint& rightmost() const { return vertices_.back(); }

    /// Point lies on the chain (on some segment or equal to the single vertex).
    bool contains(const LatticePoint& pt) const;
    /// Every point of this chain lies on `other`.
    bool is_subset_of(const NewtonPolygon& other) const;

    friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

private:
    explicit NewtonPolygon(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {}
    std::vector<LatticePoint> vertices_;
};

struct RootValuation {
    Rational valuation;
    std::int64_t multiplicity;
    friend bool operator==(const RootValuation&, const RootValuation&) = default;
};

/// d_0 zero roots, and for each segment (left to right) `length` roots of valuation -slope.
/// Entries are therefore in strictly decreasing valuation order.
struct ValuationProfile {
    std::int64_t zero_multiplicity;
    std::vector<RootValuation> entries;
    friend bool operator==(const ValuationProfile&, const ValuationProfile&) = default;
};

/// Throws std::invalid_argument for f = 0.
CoeffPoints coeff_points(const Poly& f, const Prime& p);
NewtonPolygon newton_polygon(const Poly& f, const Prime& p);
ValuationProfile valuation_profile(const NewtonPolygon& polygon);
ValuationProfile valuation_profile(const Poly& f, const Prime& p);

/// At most two vertices.
bool is_single_segment(const NewtonPolygon& polygon);

/// New_p(f) == New_p(x f'(x)). Requires f != 0, f(0) = 0 and deg f < p;
/// throws std::invalid_argument otherwise.
bool check_shift_lemma(const Poly& f, const Prime& p);

struct MinusOneReport {
    /// Index into New_p(f)'s vertices of v_j, the leftmost point shared with New_p(f - 1).
    std::size_t j;
    NewtonPolygon polygon;
    NewtonPolygon minus_one_polygon;
    /// New_p(f - 1) = [origin, v_j] ∪ [v_j, v_{j+1}] ∪ ... ∪ [v_{m-1}, v_m].
    bool shape_ok;
    /// s_1 < ... < s_j < s_0 <= s_{j+1} < ... < s_m, s_0 the slope of [origin, v_j].
    bool slope_order_ok;
};

/// Compares the polygons of f and f - 1. Requires f != 0 and f(0) = 0.
MinusOneReport minus_one_relation(const Poly& f, const Prime& p);

/// New_p(B) ⊂ New_p(B - 1) for a certified Belyi B with B(0) = 0.
/// Throws std::invalid_argument if B is not Belyi or B(0) != 0.
bool check_containment(const Poly& belyi, const Prime& p);

/// f' | f^2. Requires f != 0 and f(0) = 0.
bool divides_square(const Poly& f);

}  // namespace belyi
