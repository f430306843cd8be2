#pragma once

// Belyi height H(lambda): the least degree of a normalized Belyi polynomial
// sending lambda into {0,1}. Lower bounds come from primes of nonzero valuation,
// upper bounds from explicit certified witnesses.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "belyi/belyi.hpp"
#include "belyi/exactnum.hpp"

namespace belyi {

/// Largest prime p with v_p(lambda) != 0; 1 when there is none (including lambda in {0, 1}).
Integer lower_bound(const Rational& lambda);

/// All eight normalized Belyi polynomials of degree <= 2, each verified by certify()
/// on first use.
const std::vector<BelyiCertificate>& enumerate_low_degree();

struct WitnessEntry {
    Rational lambda;
    BelyiCertificate witness;
};

/// Known low-degree witnesses beyond the construction, e.g. -(x-1)^2(x-4)/4 for lambda = 4.
const std::vector<WitnessEntry>& curated_witnesses();

struct HeightJustification {
    enum class Kind { BoundCoincidence, Enumeration, None };
    Kind kind;
    /// For Enumeration: every normalized Belyi polynomial of degree <= excluded_max_degree
    /// was evaluated at lambda and missed {0,1}.
    std::size_t excluded_max_degree;
    std::size_t excluded_count;
};

struct HeightBounds {
    Rational lambda;
    Integer lower;
    std::size_t upper;
    BelyiCertificate witness;
    /// Origin of the witness: "construction", "enumeration" or "curated".
    std::string witness_source;
    bool exact;
    HeightJustification justification;
};

/// Throws std::invalid_argument when the construction degree is out of range.
HeightBounds height(const Rational& lambda);

}  // namespace belyi
