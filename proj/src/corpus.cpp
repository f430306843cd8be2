#include "belyi/corpus.hpp"

#include <algorithm>
#include <random>

namespace belyi {

namespace {

void push_unique(std::vector<BelyiCertificate>& out, BelyiCertificate cert) {
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const BelyiCertificate& c) { return c.subject == cert.subject; });
    if (!seen) out.push_back(std::move(cert));
}

// Prime powers <= 125 over primes <= ceiling, paired with their prime (1 for the unit).
std::vector<std::pair<std::uint64_t, std::uint64_t>> small_prime_powers(std::uint64_t ceiling) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out{{1, 1}};
    for (std::uint64_t p = 2; p <= ceiling; ++p) {
        if (!is_prime(p)) continue;
        for (std::uint64_t q = p; q <= 125; q *= p) out.emplace_back(q, p);
    }
    return out;
}

class Draw {
public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}
    // Uniform enough for corpus generation; modulo keeps it identical across standard libraries.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

private:
    std::mt19937_64 engine_;
};

Rational draw_rational(Draw& draw, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& powers) {
    for (;;) {
        const auto& num = powers[draw.below(powers.size())];
        const auto& den = powers[draw.below(powers.size())];
        if (num.second != 1 && num.second == den.second) continue;
        const Rational r(Integer(static_cast<unsigned long>(num.first)), Integer(static_cast<unsigned long>(den.first)));
        return draw.below(2) == 0 ? r : -r;
    }
}

}  // namespace

std::vector<BelyiCertificate> belyi_corpus(const CorpusSpec& spec) {
    std::vector<BelyiCertificate> generators;
    for (std::int64_t b = 1; b <= spec.max_b; ++b) {
        for (std::int64_t a = 1; a <= b; ++a) push_unique(generators, certify_or_throw(belyi_ab(a, b)));
    }
    for (std::size_t n = 1; n <= spec.chebyshev_max_n; ++n) push_unique(generators, certify_or_throw(chebyshev_belyi(n)));

    std::vector<BelyiCertificate> corpus;
    push_unique(corpus, certify_or_throw(Poly::x()));
    std::vector<BelyiCertificate> layer{corpus.front()};
    for (std::size_t length = 1; length <= spec.max_chain && !generators.empty(); ++length) {
        std::vector<BelyiCertificate> next;
        for (const auto& inner : layer) {
            for (const auto& outer : generators) push_unique(next, compose_belyi(outer, inner));
        }
        for (const auto& c : next) push_unique(corpus, c);
        layer = std::move(next);
    }
    return corpus;
}

Poly expand_split(const Rational& scale, std::size_t zero_multiplicity, const std::vector<Rational>& roots) {
    Poly f = Poly::monomial(scale, zero_multiplicity);
    for (const auto& r : roots) f *= Poly{-r, 1};
    return f;
}

std::vector<SplitPoly> split_poly_corpus(const CorpusSpec& spec) {
    std::vector<SplitPoly> out;
    if (spec.split_max_degree == 0 || spec.split_count == 0) return out;
    const auto add = [&](Rational scale, std::size_t zeros, std::vector<Rational> roots) {
        Poly f = expand_split(scale, zeros, roots);
        out.push_back({std::move(f), std::move(scale), zeros, std::move(roots)});
    };
    if (spec.split_max_degree >= 4) {
        add(Rational(625), 1, {Rational(1, 5), Rational(1, 5), Rational(5)});
        add(Rational(78125), 2, {Rational(1, 25), Rational(1, 125)});
    }

    const auto powers = small_prime_powers(std::max<std::uint64_t>(spec.prime_ceiling, 2));
    Draw draw(spec.seed);
    while (out.size() < spec.split_count) {
        const std::size_t nonzero = 1 + draw.below(spec.split_max_degree);
        const std::size_t zeros = draw.below(spec.split_max_degree - nonzero + 1);
        std::vector<Rational> roots;
        for (std::size_t i = 0; i < nonzero; ++i) roots.push_back(draw_rational(draw, powers));
        add(draw_rational(draw, powers), zeros, std::move(roots));
    }
    out.resize(std::min(out.size(), spec.split_count));
    return out;
}

std::vector<Poly> vanishing_poly_corpus(std::uint64_t seed, std::size_t count, std::size_t max_degree) {
    static constexpr std::uint64_t kBases[] = {2, 3, 5, 7};
    Draw draw(seed);
    const auto term = [&] {
        Rational c = 1;
        for (const auto base : kBases) {
            const auto e = static_cast<std::int64_t>(draw.below(7)) - 3;
            c *= pow(Rational(base), e);
        }
        return draw.below(2) == 0 ? c : -c;
    };
    std::vector<Poly> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t degree = 1 + draw.below(std::max<std::size_t>(max_degree, 1));
        std::vector<Rational> coeffs(degree + 1);
        for (std::size_t i = 1; i < degree; ++i) {
            if (draw.below(4) != 0) coeffs[i] = term();
        }
        coeffs[degree] = term();
        out.emplace_back(std::move(coeffs));
    }
    return out;
}

}  // namespace belyi
