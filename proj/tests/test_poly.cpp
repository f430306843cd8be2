#include <random>
#include <set>

#include <gtest/gtest.h>

#include "belyi/poly.hpp"
#include "support.hpp"

using namespace belyi;
using belyi::testing::poly;
using belyi::testing::q;

namespace {

Poly random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree), num(-9, 9), den(1, 4);
    std::vector<Rational> cs;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) cs.push_back(Rational(Integer(num(rng)), Integer(den(rng))));
    return Poly(cs);
}

}  // namespace

TEST(Poly, Basics) {
    const Poly f = poly({"0", "4", "-4"});
    EXPECT_EQ(f.degree(), 2);
    EXPECT_EQ(f.to_string(), "4*x - 4*x^2");
    EXPECT_EQ(Poly().degree(), -1);
    EXPECT_TRUE(poly({"0", "0"}).is_zero());
    EXPECT_EQ(f.evaluate(q("1/2")), Rational(1));
    EXPECT_EQ(f.lowest_degree(), 1u);
    EXPECT_THROW(Poly().lowest_degree(), std::domain_error);
    EXPECT_TRUE(Poly::monomial(3, 4).is_monomial());
    EXPECT_FALSE(f.is_monomial());
}

TEST(Poly, ComposeExample) {
    EXPECT_EQ(poly({"0", "4", "-4"}).compose(poly({"0", "1/5"})), poly({"0", "4/5", "-4/25"}));
}

TEST(Poly, ReduceModPExample) {
    const ModPoly expected{3, {0, 1, 2}};
    EXPECT_EQ(reduce_poly_mod_p(poly({"0", "4", "-4"}), Prime(3)), expected);
    EXPECT_THROW(reduce_poly_mod_p(poly({"1/3", "1"}), Prime(3)), std::domain_error);
}

TEST(Poly, DivRemRoundTrip) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 300; ++i) {
        const Poly f = random_poly(rng, 8), g = random_poly(rng, 4);
        if (g.is_zero()) {
            EXPECT_THROW(divrem(f, g), std::domain_error);
            continue;
        }
        const auto [quo, rem] = divrem(f, g);
        EXPECT_EQ(quo * g + rem, f);
        EXPECT_LT(rem.degree(), g.degree());
        EXPECT_TRUE(divides(g, f * g));
    }
}

TEST(Poly, CompositionLaws) {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 100; ++i) {
        const Poly f = random_poly(rng, 4), g = random_poly(rng, 3), h = random_poly(rng, 3);
        EXPECT_EQ(f.compose(g).compose(h), f.compose(g.compose(h)));
        EXPECT_EQ(f.compose(Poly::x()), f);
        const Rational at = Rational(Integer(i - 50), Integer(7));
        EXPECT_EQ(f.compose(g).evaluate(at), f.evaluate(g.evaluate(at)));
        // Chain rule and product rule.
        EXPECT_EQ(f.compose(g).derivative(), f.derivative().compose(g) * g.derivative());
        EXPECT_EQ((f * g).derivative(), f.derivative() * g + f * g.derivative());
    }
}

TEST(Poly, ModPHomomorphism) {
    std::mt19937_64 rng(23);
    const Prime p(7);
    for (int i = 0; i < 200; ++i) {
        const Poly f = random_poly(rng, 5), g = random_poly(rng, 5);
        // Denominators are at most 4, so everything is 7-integral.
        const ModPoly rf = reduce_poly_mod_p(f, p), rg = reduce_poly_mod_p(g, p), rfg = reduce_poly_mod_p(f * g, p);
        std::vector<std::uint64_t> prod(rf.coeffs.size() + rg.coeffs.size(), 0);
        for (std::size_t a = 0; a < rf.coeffs.size(); ++a)
            for (std::size_t b = 0; b < rg.coeffs.size(); ++b) prod[a + b] = (prod[a + b] + rf.coeffs[a] * rg.coeffs[b]) % 7;
        while (!prod.empty() && prod.back() == 0) prod.pop_back();
        EXPECT_EQ(rfg.coeffs, prod);
    }
}

TEST(Poly, PrimitiveIntegerPart) {
    const std::vector<Integer> expected{0, -3, 2};
    EXPECT_EQ(primitive_integer_part(poly({"0", "3/4", "-1/2"})), expected);
}

TEST(Poly, RationalRootsMatchBruteForce) {
    std::mt19937_64 rng(24);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 6), count(1, 5);
    for (int i = 0; i < 100; ++i) {
        std::set<Rational> roots;
        Poly f{1};
        const int n = count(rng);
        for (int k = 0; k < n; ++k) {
            const Rational r(Integer(num(rng)), Integer(den(rng)));
            roots.insert(r);
            f *= Poly{-r, 1};
        }
        f *= Poly{1, 0, 1};  // irreducible factor without rational roots
        f *= Rational(Integer(i + 1), Integer(3));
        const std::vector<Rational> expected(roots.begin(), roots.end());
        EXPECT_EQ(rational_roots(f), expected) << f;
    }
    EXPECT_TRUE(rational_roots(poly({"1", "0", "1"})).empty());
    EXPECT_EQ(rational_roots(poly({"0", "0", "1"})), std::vector<Rational>{0});
}
