#include "belyi/newton.hpp"

#include <algorithm>
#include <stdexcept>

#include "belyi/belyi.hpp"

namespace belyi {

namespace {

__int128 cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return static_cast<__int128>(a.x - o.x) * (b.y - o.y) - static_cast<__int128>(a.y - o.y) * (b.x - o.x);
}

bool collinear(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) { return cross(a, b, c) == 0; }

Rational slope_of(const LatticePoint& a, const LatticePoint& b) {
    return Rational(Integer(static_cast<long>(b.y - a.y)), Integer(static_cast<long>(b.x - a.x)));
}

void require_nonzero(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("Newton polygon of the zero polynomial");
}

void require_vanishing_at_zero(const Poly& f) {
    require_nonzero(f);
    if (!f.coeff(0).is_zero()) throw std::invalid_argument("requires f(0) = 0, got f(0) = " + f.coeff(0).to_string());
}

// Removes vertices that lie on the line through their neighbours.
std::vector<LatticePoint> drop_collinear(const std::vector<LatticePoint>& chain) {
    std::vector<LatticePoint> out;
    for (const auto& pt : chain) {
        while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), pt)) out.pop_back();
        out.push_back(pt);
    }
    return out;
}

}  // namespace

NewtonPolygon NewtonPolygon::lower_hull(std::vector<LatticePoint> points) {
    if (points.empty()) throw std::invalid_argument("lower hull of an empty point set");
    std::sort(points.begin(), points.end());
    // Only the lowest point at each abscissa can be on the lower boundary.
    points.erase(std::unique(points.begin(), points.end(),
                             [](const LatticePoint& a, const LatticePoint& b) { return a.x == b.x; }),
                 points.end());
    std::vector<LatticePoint> hull;
    for (const auto& pt : points) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
        hull.push_back(pt);
    }
    return NewtonPolygon(std::move(hull));
}

NewtonPolygon NewtonPolygon::from_vertices(std::vector<LatticePoint> vertices) {
    if (vertices.empty()) throw std::invalid_argument("polygon needs at least one vertex");
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        if (vertices[i].x <= vertices[i - 1].x) throw std::invalid_argument("polygon vertices must have increasing x");
        if (i >= 2 && cross(vertices[i - 2], vertices[i - 1], vertices[i]) <= 0) {
            throw std::invalid_argument("polygon slopes must be strictly increasing");
        }
    }
    return NewtonPolygon(std::move(vertices));
}

std::vector<Segment> NewtonPolygon::segments() const {
    std::vector<Segment> out;
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        out.push_back({slope_of(vertices_[i - 1], vertices_[i]), vertices_[i].x - vertices_[i - 1].x});
    }
    return out;
}

bool NewtonPolygon::contains(const LatticePoint& pt) const {
    if (vertices_.size() == 1) return pt == vertices_.front();
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        const auto& a = vertices_[i - 1];
        const auto& b = vertices_[i];
        if (pt.x >= a.x && pt.x <= b.x) return collinear(a, b, pt);
    }
    return false;
}

bool NewtonPolygon::is_subset_of(const NewtonPolygon& other) const {
    for (const auto& v : vertices_) {
        if (!other.contains(v)) return false;
    }
    // A segment with both ends on a convex chain lies on it iff no bend of the chain sits strictly between.
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        const auto& a = vertices_[i - 1];
        const auto& b = vertices_[i];
        for (const auto& w : other.vertices_) {
            if (w.x > a.x && w.x < b.x && !collinear(a, b, w)) return false;
        }
    }
    return true;
}

CoeffPoints coeff_points(const Poly& f, const Prime& p) {
    require_nonzero(f);
    CoeffPoints points;
    const auto& coeffs = f.coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        points.push_back({static_cast<std::int64_t>(i), valuation(coeffs[i], p).value()});
    }
    return points;
}

NewtonPolygon newton_polygon(const Poly& f, const Prime& p) { return NewtonPolygon::lower_hull(coeff_points(f, p)); }

ValuationProfile valuation_profile(const NewtonPolygon& polygon) {
    ValuationProfile profile{polygon.leftmost().x, {}};
    for (const auto& seg : polygon.segments()) profile.entries.push_back({-seg.slope, seg.length});
    return profile;
}

ValuationProfile valuation_profile(const Poly& f, const Prime& p) { return valuation_profile(newton_polygon(f, p)); }

bool is_single_segment(const NewtonPolygon& polygon) { return polygon.vertices().size() <= 2; }

bool check_shift_lemma(const Poly& f, const Prime& p) {
    require_vanishing_at_zero(f);
    if (static_cast<std::uint64_t>(f.degree()) >= p.value()) {
        throw std::invalid_argument("shift lemma requires deg f < p; deg f = " + std::to_string(f.degree()) +
                                    ", p = " + std::to_string(p.value()));
    }
    return newton_polygon(f, p) == newton_polygon(Poly::x() * f.derivative(), p);
}

MinusOneReport minus_one_relation(const Poly& f, const Prime& p) {
    require_vanishing_at_zero(f);
    NewtonPolygon polygon = newton_polygon(f, p);
    NewtonPolygon shifted = newton_polygon(f - Poly::constant(1), p);
    const auto& v = polygon.vertices();

    std::size_t j = v.size() - 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (shifted.contains(v[i])) {
            j = i;
            break;
        }
    }

    std::vector<LatticePoint> expected{{0, 0}};
    expected.insert(expected.end(), v.begin() + static_cast<std::ptrdiff_t>(j), v.end());
    const bool shape_ok = shifted.contains(v[j]) && drop_collinear(expected) == shifted.vertices();

    const auto segs = polygon.segments();
    bool slope_order_ok = std::adjacent_find(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
                              return !(a.slope < b.slope);
                          }) == segs.end();
    const Rational s0 = slope_of({0, 0}, v[j]);
    // segs[i] joins v[i] and v[i + 1]: s_j is segs[j - 1], s_{j+1} is segs[j].
    if (j >= 1) slope_order_ok = slope_order_ok && segs[j - 1].slope < s0;
    if (j < segs.size()) slope_order_ok = slope_order_ok && s0 <= segs[j].slope;

    return {j, std::move(polygon), std::move(shifted), shape_ok, slope_order_ok};
}

bool check_containment(const Poly& belyi, const Prime& p) {
    if (!std::holds_alternative<BelyiCertificate>(certify(belyi))) {
        throw std::invalid_argument("containment check requires a Belyi polynomial: " + belyi.to_string());
    }
    require_vanishing_at_zero(belyi);
    return newton_polygon(belyi, p).is_subset_of(newton_polygon(belyi - Poly::constant(1), p));
}

bool divides_square(const Poly& f) {
    require_vanishing_at_zero(f);
    return divides(f.derivative(), f * f);
}

}  // namespace belyi
