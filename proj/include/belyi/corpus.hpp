#pragma once

// Deterministic test corpora: certified Belyi polynomials built from the
// B_{a,b} and Chebyshev families by composition, and polynomials that split
// over Q with known roots.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "belyi/belyi.hpp"
#include "belyi/poly.hpp"

namespace belyi {

struct CorpusSpec {
    std::int64_t max_b = 4;
    std::size_t max_chain = 2;
    std::size_t chebyshev_max_n = 10;
    std::uint64_t seed = 20111112;
    std::uint64_t prime_ceiling = 31;
    /// Split-polynomial corpus size and the largest degree it draws.
    std::size_t split_count = 200;
    std::size_t split_max_degree = 6;
};

/// x, every B_{a,b} with b <= max_b, every chebyshev_belyi(n) with n <= chebyshev_max_n,
/// and all compositions of those of length <= max_chain, deduplicated, in generation order.
std::vector<BelyiCertificate> belyi_corpus(const CorpusSpec& spec);

struct SplitPoly {
    Poly poly;
    Rational scale;
    std::size_t zero_multiplicity;
    /// Nonzero roots with multiplicity.
    std::vector<Rational> roots;
};

/// scale * x^zero_multiplicity * ∏ (x - root).
Poly expand_split(const Rational& scale, std::size_t zero_multiplicity, const std::vector<Rational>& roots);

/// Starts with the worked examples 5^4 x (x - 1/5)^2 (x - 5) and 5^7 x^2 (x - 1/25)(x - 1/125)
/// when split_max_degree >= 4, then pseudo-random split polynomials whose roots have
/// numerator and denominator prime powers <= 125 over primes <= prime_ceiling.
/// Empty when split_max_degree == 0.
std::vector<SplitPoly> split_poly_corpus(const CorpusSpec& spec);

/// Nonzero polynomials with f(0) = 0 and degree in [1, max_degree]; coefficients are zero
/// about a quarter of the time, otherwise ± ratios of powers of 2, 3, 5, 7.
std::vector<Poly> vanishing_poly_corpus(std::uint64_t seed, std::size_t count, std::size_t max_degree);

}  // namespace belyi
