#include "belyi/construct.hpp"

#include <set>
#include <stdexcept>

namespace belyi {

namespace {

using ValueSet = std::set<Rational>;

void require_degree(const Integer& b) {
    if (b > kMaxConstructionDegree) {
        throw std::invalid_argument("construction degree " + b.get_str() + " exceeds the supported maximum " +
                                    std::to_string(kMaxConstructionDegree));
    }
}

std::pair<std::int64_t, std::int64_t> ab_of(const Rational& interior) {
    require_degree(interior.denominator());
    return {interior.numerator().get_si(), interior.denominator().get_si()};
}

// Interior value with the smallest denominator, then the smallest numerator.
std::optional<Rational> pick_interior(const ValueSet& values) {
    std::optional<Rational> best;
    for (const auto& v : values) {
        if (v <= Rational(0) || v >= Rational(1)) continue;
        if (!best || v.denominator() < best->denominator() ||
            (v.denominator() == best->denominator() && v.numerator() < best->numerator())) {
            best = v;
        }
    }
    return best;
}

bool inside_zero_one(const ValueSet& values) {
    for (const auto& v : values) {
        if (v != Rational(0) && v != Rational(1)) return false;
    }
    return true;
}

ValueSet map_values(const Poly& f, const ValueSet& values) {
    ValueSet out;
    for (const auto& v : values) out.insert(f.evaluate(v));
    return out;
}

}  // namespace

Poly replay(const Poly& base, const std::vector<ConstructionStep>& steps) {
    Poly current = base;
    for (const auto& step : steps) {
        if (step.affine) current = step.affine->as_poly().compose(current);
        if (step.belyi_ab) current = belyi_ab(step.belyi_ab->first, step.belyi_ab->second).compose(current);
    }
    return current;
}

ConstructionTrace belyi_for_rational(const Rational& lambda) {
    std::vector<ConstructionStep> steps;
    int image = 0;
    if (lambda == Rational(0) || lambda == Rational(1)) {
        image = lambda.is_zero() ? 0 : 1;
    } else if (lambda > Rational(0) && lambda < Rational(1)) {
        steps.push_back({std::nullopt, ab_of(lambda)});
        image = 1;
    } else if (lambda > Rational(1)) {
        // x/lambda sends lambda to 1 and 1 to 1/lambda.
        const Rational inv = lambda.inverse();
        steps.push_back({AffineMap{inv, 0}, ab_of(inv)});
    } else {
        // (x - lambda)/(1 - lambda) sends lambda to 0, 1 to 1 and 0 to -lambda/(1 - lambda).
        const Rational span = Rational(1) - lambda;
        steps.push_back({AffineMap{span.inverse(), lambda / span}, ab_of(-lambda / span)});
    }
    const Poly base = Poly::x();
    BelyiCertificate result = certify_or_throw(replay(base, steps));
    if (result.subject.evaluate(lambda) != Rational(image)) {
        throw std::logic_error("construction for " + lambda.to_string() + " missed its target image");
    }
    return {base, std::move(steps), std::move(result), lambda, image};
}

ConstructionTrace reduce_critical_values(const Poly& g, const std::vector<Rational>& critical_points) {
    if (g.is_constant()) throw std::invalid_argument("reduce_critical_values requires a nonconstant polynomial");
    const Poly dg = g.derivative();
    Poly split = Poly::constant(1);
    for (const auto& c : critical_points) split *= Poly{-c, 1};
    if (dg.degree() != split.degree() || !divides(split, dg)) {
        throw std::invalid_argument("critical points do not split g' = " + dg.to_string());
    }

    ValueSet values{g.evaluate(0), g.evaluate(1)};
    for (const auto& c : critical_points) values.insert(g.evaluate(c));

    std::vector<ConstructionStep> steps;
    std::optional<AffineMap> pending;
    if (!inside_zero_one(values)) {
        const Rational lo = *values.begin();
        const Rational hi = *values.rbegin();
        // Rolle guarantees two distinct values; the translation is a fallback.
        const AffineMap map = lo == hi ? AffineMap{1, lo} : AffineMap{(hi - lo).inverse(), lo / (hi - lo)};
        values = map_values(map.as_poly(), values);
        pending = map;
    }
    while (const auto interior = pick_interior(values)) {
        const auto ab = ab_of(*interior);
        const Poly bab = belyi_ab(ab.first, ab.second);
        values = map_values(bab, values);
        values.insert(Rational(0));
        values.insert(Rational(1));
        steps.push_back({pending, ab});
        pending.reset();
    }
    if (pending) steps.push_back({pending, std::nullopt});

    BelyiCertificate result = certify_or_throw(replay(g, steps));
    return {g, std::move(steps), std::move(result), std::nullopt, std::nullopt};
}

}  // namespace belyi
