#pragma once

// Law checks over the corpora: the polygon lemmas, the Belyi family and monoid
// laws, the polygon theorems for Belyi polynomials of degree < p, and oracle
// comparisons. Shared by the verify subcommand and the acceptance suite.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "belyi/corpus.hpp"
#include "belyi/json_io.hpp"

namespace belyi::suites {

struct CheckReport {
    std::string name;
    std::size_t checks = 0;
    std::vector<std::string> failures;
    double seconds = 0.0;

    bool ok() const { return failures.empty(); }
    /// Counts one check; records `what` on failure (first 50 failures kept verbatim).
    void expect(bool condition, const std::string& what);

private:
    std::size_t extra_failures_ = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckReport> checks;
    bool ok() const;
    std::size_t failure_count() const;
};

/// Primes p <= ceiling.
std::vector<Prime> primes_up_to(std::uint64_t ceiling);

// polygon-laws
CheckReport hull_soundness(const std::vector<Poly>& polys, const std::vector<Prime>& primes);
CheckReport minus_one_lemma(const std::vector<Poly>& polys, const std::vector<Prime>& primes);
CheckReport shift_lemma(const std::vector<Poly>& polys, const std::vector<Prime>& primes);
/// Exhaustive over degree <= max_degree, f(0) = 0, coefficients in {0, -2, -1, 1, 2, 1/2}.
CheckReport monomial_criterion(std::size_t max_degree = 5);

// belyi-laws
CheckReport certificates_recheck(const std::vector<BelyiCertificate>& corpus);
CheckReport family_laws(std::int64_t max_b = 12, std::size_t chebyshev_max_n = 12);
CheckReport composition_closure(const CorpusSpec& spec);
CheckReport complement_closure(const std::vector<BelyiCertificate>& corpus);
/// belyi_for_rational over all a/b with |a| <= bound, 1 <= b <= bound.
CheckReport construction_soundness(std::int64_t bound = 25);

// theorems
/// For B(0) = 0 and deg B < p <= ceiling: New_p(B) ⊂ New_p(B - 1), New_p(B - 1) one segment.
CheckReport containment_and_single_segment(const std::vector<BelyiCertificate>& corpus, std::uint64_t ceiling);
/// Every prime in the support of a rational root of B or B - 1 is <= deg B.
CheckReport root_prime_audit(const std::vector<BelyiCertificate>& corpus);
CheckReport sharpness(const std::vector<std::uint64_t>& primes = {2, 3, 5, 7, 11, 13});
CheckReport height_of_four();

// oracles
/// Monotone-chain hull against a brute-force extreme-point test.
CheckReport hull_oracle(const std::vector<Poly>& polys, const std::vector<Prime>& primes);
/// valuation_profile against the valuations of the known roots.
CheckReport profile_oracle(const std::vector<SplitPoly>& corpus, const std::vector<Prime>& primes);
/// f(γx)/(a_n γ^n) for a root γ of least valuation has its top segment on the x-axis.
CheckReport rescaled_top_segment(const std::vector<SplitPoly>& corpus, const std::vector<Prime>& primes);

inline constexpr std::string_view kSuiteNames[] = {"polygon-laws", "belyi-laws", "theorems", "oracles", "all"};

/// Seed and size of the random polynomial set used by the polygon laws.
inline constexpr std::size_t kRandomPolyCount = 500;
inline constexpr std::size_t kRandomPolyMaxDegree = 8;

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(std::string_view name, const CorpusSpec& spec);

json::Json to_json(const CheckReport& report);
json::Json to_json(const SuiteReport& report);

}  // namespace belyi::suites
