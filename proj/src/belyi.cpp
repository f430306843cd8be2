#include "belyi/belyi.hpp"

#include <optional>
#include <stdexcept>

namespace belyi {

namespace {

std::optional<int> as_bit(const Rational& q) {
    if (q == Rational(0)) return 0;
    if (q == Rational(1)) return 1;
    return std::nullopt;
}

Poly one_minus(const Poly& b) { return Poly::constant(1) - b; }

}  // namespace

bool BelyiCertificate::recheck() const {
    if (subject.is_constant()) return false;
    if (as_bit(subject.evaluate(0)) != value_at_0 || as_bit(subject.evaluate(1)) != value_at_1) return false;
    return subject.derivative() * quotient == subject * one_minus(subject);
}

CertifyResult certify(const Poly& b) {
    if (b.is_constant()) throw std::invalid_argument("certify requires a nonconstant polynomial");
    const Rational at0 = b.evaluate(0);
    const Rational at1 = b.evaluate(1);
    const auto bit0 = as_bit(at0);
    const auto bit1 = as_bit(at1);
    if (!bit0) return BelyiFailure{BelyiFailure::Condition::EndpointZero, "endpoint B(0)=" + at0.to_string()};
    if (!bit1) return BelyiFailure{BelyiFailure::Condition::EndpointOne, "endpoint B(1)=" + at1.to_string()};
    auto [quotient, remainder] = divrem(b * one_minus(b), b.derivative());
    if (!remainder.is_zero()) {
        return BelyiFailure{BelyiFailure::Condition::CriticalValues,
                            "critical values: B' does not divide B(1-B), remainder " + remainder.to_string()};
    }
    return BelyiCertificate{b, *bit0, *bit1, std::move(quotient)};
}

BelyiCertificate certify_or_throw(const Poly& b) {
    auto result = certify(b);
    if (auto* failure = std::get_if<BelyiFailure>(&result)) {
        throw std::logic_error("expected a Belyi polynomial, " + b.to_string() + ": " + failure->reason);
    }
    return std::get<BelyiCertificate>(std::move(result));
}

Poly belyi_ab(std::int64_t a, std::int64_t b) {
    if (a < 1 || a > b) {
        throw std::invalid_argument("B_{a,b} requires 1 <= a <= b, got a=" + std::to_string(a) +
                                    ", b=" + std::to_string(b));
    }
    const std::int64_t c = b - a;
    // pow(0, 0) == 1 covers a == b.
    const Rational scale = pow(Rational(b), b) * pow(Rational(a), -a) * (c == 0 ? Rational(1) : pow(Rational(c), -c));
    return scale * Poly::monomial(1, static_cast<std::size_t>(a)) *
           pow(Poly{1, -1}, static_cast<std::size_t>(c));
}

Poly chebyshev(std::size_t n) {
    Poly prev = Poly::constant(1);
    if (n == 0) return prev;
    Poly cur = Poly::x();
    const Poly two_x{0, 2};
    for (std::size_t k = 1; k < n; ++k) {
        Poly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly chebyshev_belyi(std::size_t n) {
    if (n == 0) throw std::invalid_argument("chebyshev_belyi requires n >= 1");
    return Rational(1, 2) * (chebyshev(n).compose(Poly{-1, 2}) + Poly::constant(1));
}

BelyiCertificate compose_belyi(const BelyiCertificate& outer, const BelyiCertificate& inner) {
    return certify_or_throw(outer.subject.compose(inner.subject));
}

BelyiCertificate complement(const BelyiCertificate& b) { return certify_or_throw(one_minus(b.subject)); }

PrecomposeResult precompose_linear(const BelyiCertificate& b, const Rational& gamma, const Rational& alpha) {
    if (gamma.is_zero()) throw std::invalid_argument("linear precomposition requires gamma != 0");
    const Rational image0 = -alpha;
    const Rational image1 = gamma - alpha;
    const Rational at0 = b.subject.evaluate(image0);
    const Rational at1 = b.subject.evaluate(image1);
    std::string reason;
    if (!as_bit(at0)) reason = "B(" + image0.to_string() + ")=" + at0.to_string() + " is the image of 0";
    if (!as_bit(at1)) {
        if (!reason.empty()) reason += "; ";
        reason += "B(" + image1.to_string() + ")=" + at1.to_string() + " is the image of 1";
    }
    if (!reason.empty()) return LinearIllegality{image0, image1, at0, at1, "illegal: " + reason};
    return certify_or_throw(b.subject.compose(Poly{-alpha, gamma}));
}

}  // namespace belyi
