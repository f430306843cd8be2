#pragma once

// Normalized Belyi polynomials: B(0), B(1) in {0,1} and B' | B(1 - B).

#include <cstdint>
#include <string>
#include <variant>

#include "belyi/exactnum.hpp"
#include "belyi/poly.hpp"

namespace belyi {

/// Witness for both Belyi conditions: subject' * quotient == subject * (1 - subject).
struct BelyiCertificate {
    Poly subject;
    int value_at_0;
    int value_at_1;
    Poly quotient;

    /// Re-derives every claim by exact multiplication and evaluation.
    bool recheck() const;

    friend bool operator==(const BelyiCertificate&, const BelyiCertificate&) = default;
};

struct BelyiFailure {
    enum class Condition { EndpointZero, EndpointOne, CriticalValues };
    Condition condition;
    std::string reason;
};

using CertifyResult = std::variant<BelyiCertificate, BelyiFailure>;

/// Throws std::invalid_argument for constant B.
CertifyResult certify(const Poly& b);

/// certify() for input known to be Belyi; throws std::logic_error otherwise.
BelyiCertificate certify_or_throw(const Poly& b);

/// b^b a^{-a} (b-a)^{-(b-a)} x^a (1-x)^{b-a}, with 0^0 = 1.
/// Throws std::invalid_argument unless 1 <= a <= b.
Poly belyi_ab(std::int64_t a, std::int64_t b);

/// Chebyshev polynomial of the first kind, T_0 = 1, T_1 = x, T_{n+1} = 2x T_n - T_{n-1}.
Poly chebyshev(std::size_t n);

/// (T_n(2x - 1) + 1) / 2. Throws std::invalid_argument for n = 0.
Poly chebyshev_belyi(std::size_t n);

/// outer ∘ inner, re-certified.
BelyiCertificate compose_belyi(const BelyiCertificate& outer, const BelyiCertificate& inner);

/// 1 - B.
BelyiCertificate complement(const BelyiCertificate& b);

struct LinearIllegality {
    Rational image_of_0;  // -alpha
    Rational image_of_1;  // gamma - alpha
    Rational b_at_image_of_0;
    Rational b_at_image_of_1;
    std::string reason;
};

using PrecomposeResult = std::variant<BelyiCertificate, LinearIllegality>;

/// B(gamma x - alpha), legal iff B(-alpha), B(gamma - alpha) are in {0,1}.
/// Throws std::invalid_argument for gamma = 0.
PrecomposeResult precompose_linear(const BelyiCertificate& b, const Rational& gamma, const Rational& alpha);

}  // namespace belyi
