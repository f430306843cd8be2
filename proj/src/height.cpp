#include "belyi/height.hpp"

#include <stdexcept>

#include "belyi/construct.hpp"

namespace belyi {

namespace {

bool hits(const Poly& b, const Rational& lambda) {
    const Rational v = b.evaluate(lambda);
    return v == Rational(0) || v == Rational(1);
}

}  // namespace

Integer lower_bound(const Rational& lambda) {
    if (lambda.is_zero() || lambda == Rational(1)) return 1;
    const auto support = prime_support(lambda);
    return support.empty() ? Integer(1) : support.back().prime;
}

const std::vector<BelyiCertificate>& enumerate_low_degree() {
    // Degree 1: c x + d with d, c + d in {0,1}. Degree 2: alpha (x - c)^2 + v with
    // v the critical value; the endpoint equations force c in {0, 1, 1/2}.
    static const std::vector<BelyiCertificate> all = [] {
        const Poly x = Poly::x();
        const Poly one = Poly::constant(1);
        const Poly x_minus_1{-1, 1};
        const Poly two_x_minus_1{-1, 2};
        std::vector<BelyiCertificate> out;
        for (const Poly& b : {x, one - x, x * x, x_minus_1 * x_minus_1, two_x_minus_1 * two_x_minus_1, one - x * x,
                              one - x_minus_1 * x_minus_1, one - two_x_minus_1 * two_x_minus_1}) {
            out.push_back(certify_or_throw(b));
        }
        return out;
    }();
    return all;
}

const std::vector<WitnessEntry>& curated_witnesses() {
    static const std::vector<WitnessEntry> table = [] {
        const Poly x_minus_1{-1, 1};
        const Poly b = Rational(-1, 4) * x_minus_1 * x_minus_1 * Poly{-4, 1};
        return std::vector<WitnessEntry>{{Rational(4), certify_or_throw(b)}};
    }();
    return table;
}

HeightBounds height(const Rational& lambda) {
    const Integer lower = lower_bound(lambda);

    ConstructionTrace trace = belyi_for_rational(lambda);
    BelyiCertificate witness = std::move(trace.result);
    std::string source = "construction";

    const auto improve = [&](const BelyiCertificate& candidate, const char* origin) {
        if (candidate.subject.degree() < witness.subject.degree() && hits(candidate.subject, lambda)) {
            witness = candidate;
            source = origin;
        }
    };
    for (const auto& entry : curated_witnesses()) {
        if (entry.lambda == lambda) improve(entry.witness, "curated");
    }
    for (const auto& candidate : enumerate_low_degree()) improve(candidate, "enumeration");

    const auto upper = static_cast<std::size_t>(witness.subject.degree());
    if (lower > upper) {
        throw std::logic_error("lower bound exceeds certified upper bound for " + lambda.to_string());
    }

    HeightJustification justification{HeightJustification::Kind::None, 0, 0};
    bool exact = false;
    if (lower == upper) {
        exact = true;
        justification.kind = HeightJustification::Kind::BoundCoincidence;
    } else if (upper <= 3) {
        // The degree <= 2 list is complete, so a miss on all of degree < upper settles it.
        std::size_t excluded = 0;
        bool all_miss = true;
        for (const auto& candidate : enumerate_low_degree()) {
            if (static_cast<std::size_t>(candidate.subject.degree()) >= upper) continue;
            ++excluded;
            all_miss = all_miss && !hits(candidate.subject, lambda);
        }
        if (all_miss) {
            exact = true;
            justification = {HeightJustification::Kind::Enumeration, upper - 1, excluded};
        }
    }
    return {lambda, lower, upper, std::move(witness), std::move(source), exact, justification};
}

}  // namespace belyi
