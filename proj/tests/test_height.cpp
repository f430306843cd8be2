#include <random>
#include <set>

#include <gtest/gtest.h>

#include "belyi/construct.hpp"
#include "belyi/height.hpp"
#include "support.hpp"

using namespace belyi;
using belyi::testing::poly;
using belyi::testing::q;

namespace {


// Solve the endpoint equations for c x + d and alpha (x - c)^2 + v directly.
std::set<std::vector<Rational>> solve_low_degree() {
    std::set<std::vector<Rational>> out;
    for (int d : {0, 1})
        for (int e1 : {0, 1})
            if (e1 != d) out.insert(Poly{d, e1 - d}.coeffs());
    for (int v : {0, 1})
        for (int e0 : {0, 1})
            for (int e1 : {0, 1}) {
                const Rational a = e0 - v, b = e1 - v;  // alpha c^2 and alpha (1 - c)^2
                Rational c, alpha;
                if (a.is_zero() && b.is_zero()) continue;
                if (a.is_zero()) {
                    c = 0;
                    alpha = b;
                } else if (b.is_zero()) {
                    c = 1;
                    alpha = a;
                } else if (a == b) {
                    c = Rational(1, 2);
                    alpha = 4 * a;
                } else {
                    continue;  // (1 - c)^2 / c^2 = -1 has no rational solution
                }
                out.insert((alpha * pow(Poly{-c, 1}, 2) + Poly{v}).coeffs());
            }
    return out;
}

bool hits(const Poly& f, const Rational& lambda) {
    const Rational v = f.evaluate(lambda);
    return v == Rational(0) || v == Rational(1);
}

}  // namespace

TEST(LowerBound, Examples) {
    EXPECT_EQ(lower_bound(4), 2);
    EXPECT_EQ(lower_bound(q("1/5")), 5);
    EXPECT_EQ(lower_bound(q("3/2")), 3);
    EXPECT_EQ(lower_bound(-1), 1);
    EXPECT_EQ(lower_bound(0), 1);
    EXPECT_EQ(lower_bound(1), 1);
}

TEST(Enumeration, MatchesClosedFormSolution) {
    const auto& all = enumerate_low_degree();
    EXPECT_EQ(all.size(), 8u);
    std::set<std::vector<Rational>> got;
    for (const auto& c : all) {
        EXPECT_TRUE(c.recheck());
        got.insert(c.subject.coeffs());
    }
    EXPECT_EQ(got, solve_low_degree());
    EXPECT_TRUE(got.count(poly({"0", "4", "-4"}).coeffs()));
}

TEST(Enumeration, AllMissFour) {
    for (const auto& c : enumerate_low_degree()) EXPECT_FALSE(hits(c.subject, 4)) << c.subject;
}

TEST(Height, OfFour) {
    const auto h = height(4);
    EXPECT_EQ(h.lower, 2);
    EXPECT_EQ(h.upper, 3u);
    EXPECT_TRUE(h.exact);
    EXPECT_EQ(h.witness.subject, (Rational(-1, 4) * pow(Poly{-1, 1}, 2) * Poly{-4, 1}));
    EXPECT_EQ(h.witness_source, "curated");
    EXPECT_EQ(h.justification.kind, HeightJustification::Kind::Enumeration);
    EXPECT_EQ(h.justification.excluded_max_degree, 2u);
    EXPECT_EQ(h.justification.excluded_count, 8u);
}

TEST(Height, Examples) {
    const auto third = height(q("1/3"));
    EXPECT_EQ(third.lower, 3);
    EXPECT_EQ(third.upper, 3u);
    EXPECT_TRUE(third.exact);
    EXPECT_EQ(third.witness.subject, belyi_ab(1, 3));

    const auto two = height(2);
    EXPECT_EQ(two.upper, 2u);
    EXPECT_TRUE(two.exact);
    EXPECT_EQ(two.witness.subject, poly({"0", "2", "-1"}));

    EXPECT_EQ(height(0).upper, 1u);
    EXPECT_TRUE(height(1).exact);

    const auto minus_one = height(-1);
    EXPECT_EQ(minus_one.lower, 1);
    EXPECT_EQ(minus_one.upper, 2u);
}

TEST(Height, Sharpness) {
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        const auto hp = height(p);
        EXPECT_TRUE(hp.exact);
        EXPECT_EQ(hp.upper, static_cast<std::size_t>(p));
        EXPECT_EQ(hp.lower, p);
        const auto hinv = height(Rational(Integer(1), Integer(p)));
        EXPECT_TRUE(hinv.exact);
        EXPECT_EQ(hinv.upper, static_cast<std::size_t>(p));
        EXPECT_EQ(hp.witness.subject, belyi_ab(1, p).compose(Poly{0, Rational(Integer(1), Integer(p))}));
        EXPECT_EQ(hinv.witness.subject, belyi_ab(1, p));
    }
}

TEST(Height, RandomizedSoundness) {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 40);
    for (int i = 0; i < 300; ++i) {
        const Rational lambda(Integer(num(rng)), Integer(den(rng)));
        const auto h = height(lambda);
        EXPECT_TRUE(h.witness.recheck());
        EXPECT_TRUE(hits(h.witness.subject, lambda)) << lambda;
        EXPECT_EQ(static_cast<std::size_t>(h.witness.subject.degree()), h.upper);
        EXPECT_LE(h.lower, Integer(static_cast<unsigned long>(h.upper)));
        if (h.exact && h.lower != Integer(static_cast<unsigned long>(h.upper))) {
            EXPECT_LE(h.upper, 3u);
            for (const auto& c : enumerate_low_degree())
                if (static_cast<std::size_t>(c.subject.degree()) < h.upper) EXPECT_FALSE(hits(c.subject, lambda));
        }
    }
}
