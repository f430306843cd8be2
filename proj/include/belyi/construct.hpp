#pragma once

// Belyi's construction over Q: chains of affine normalizations and B_{a,b}
// post-compositions that push every critical value into {0,1}.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "belyi/belyi.hpp"
#include "belyi/exactnum.hpp"
#include "belyi/poly.hpp"

namespace belyi {

/// y ↦ gamma*y - alpha.
struct AffineMap {
    Rational gamma;
    Rational alpha;
    Poly as_poly() const { return Poly{-alpha, gamma}; }
    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// One stage of the chain: optionally an affine map, then optionally B_{a,b}.
struct ConstructionStep {
    std::optional<AffineMap> affine;
    std::optional<std::pair<std::int64_t, std::int64_t>> belyi_ab;
    friend bool operator==(const ConstructionStep&, const ConstructionStep&) = default;
};

struct ConstructionTrace {
    /// Polynomial the steps are post-composed onto (x for a rational target).
    Poly base;
    std::vector<ConstructionStep> steps;
    BelyiCertificate result;
    /// Set when the construction targets a point lambda.
    std::optional<Rational> lambda;
    std::optional<int> image_of_lambda;
};

/// Applies the steps to `base` in order.
Poly replay(const Poly& base, const std::vector<ConstructionStep>& steps);

/// Largest construction degree accepted; B_{a,b} with larger b is refused.
inline constexpr std::int64_t kMaxConstructionDegree = 4096;

/// A normalized Belyi polynomial of degree b sending lambda into {0,1}, where b is the
/// denominator of the interior value fed to B_{a,b}. Throws std::invalid_argument if that
/// degree exceeds kMaxConstructionDegree.
ConstructionTrace belyi_for_rational(const Rational& lambda);

/// Post-composes g with affine maps and B_{a,b} until all critical values and the
/// images of 0 and 1 lie in {0,1}. `critical_points` must be the full root multiset
/// of g' (checked by exact division); throws std::invalid_argument otherwise.
ConstructionTrace reduce_critical_values(const Poly& g, const std::vector<Rational>& critical_points);

}  // namespace belyi
