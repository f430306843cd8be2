#include <random>

#include <gtest/gtest.h>

#include "belyi/exactnum.hpp"
#include "support.hpp"

using namespace belyi;
using belyi::testing::q;

namespace {

// Independent valuation: strip factors of p by repeated exact division.
std::int64_t naive_valuation(Integer n, unsigned long p) {
    std::int64_t v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5000, 5000), den(1, 5000);
    long n = num(rng);
    if (n == 0) n = 1;
    return Rational(Integer(n), Integer(den(rng)));
}

}  // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(q("6/4").to_string(), "3/2");
    EXPECT_EQ(q("-10/5").to_string(), "-2");
    EXPECT_EQ(q("−3/7"), Rational(-3) / Rational(7));
    EXPECT_EQ(q("0"), Rational(0));
    EXPECT_THROW(q("1/0"), std::invalid_argument);
    EXPECT_THROW(q("1.5"), std::invalid_argument);
    EXPECT_THROW(q(""), std::invalid_argument);
    EXPECT_THROW(q("3/"), std::invalid_argument);
}

TEST(Rational, Arithmetic) {
    EXPECT_EQ(q("1/2") + q("1/3"), q("5/6"));
    EXPECT_EQ(q("1/2") * q("-4/3"), q("-2/3"));
    EXPECT_EQ(q("-3/4").abs(), q("3/4"));
    EXPECT_EQ(q("-3/4").inverse(), q("-4/3"));
    EXPECT_THROW(Rational(0).inverse(), std::domain_error);
    EXPECT_THROW(Rational(Integer(1), Integer(0)), std::domain_error);
    EXPECT_EQ(pow(q("2/3"), 3), q("8/27"));
    EXPECT_EQ(pow(q("2/3"), -2), q("9/4"));
    EXPECT_EQ(pow(q("0"), 0), Rational(1));
    EXPECT_LT(q("-1/2"), q("1/3"));
}

TEST(Prime, ValidatesInput) {
    EXPECT_EQ(Prime(7).value(), 7u);
    EXPECT_THROW(Prime(1), std::invalid_argument);
    EXPECT_THROW(Prime(91), std::invalid_argument);
    EXPECT_NO_THROW(Prime(999999999989ULL));
    EXPECT_THROW(Prime(Prime::kMaxPrime + 39), std::invalid_argument);
}

TEST(Valuation, Examples) {
    EXPECT_EQ(valuation(50, Prime(5)), Valuation(2));
    EXPECT_EQ(valuation(q("4/15"), Prime(3)), Valuation(-1));
    EXPECT_EQ(valuation(q("4/15"), Prime(2)), Valuation(2));
    EXPECT_EQ(valuation(7, Prime(5)), Valuation(0));
    EXPECT_TRUE(valuation(0, Prime(5)).is_infinite());
    EXPECT_EQ(valuation(0, Prime(5)).to_string(), "INFINITY");
    EXPECT_THROW(valuation(0, Prime(5)).value(), std::logic_error);
    EXPECT_GT(Valuation::infinity(), Valuation(1000000));
}

TEST(Valuation, MatchesRepeatedDivision) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const Rational r = random_rational(rng);
        for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 13ul}) {
            const auto expected = naive_valuation(abs(r.numerator()), p) - naive_valuation(r.denominator(), p);
            EXPECT_EQ(valuation(r, Prime(p)).value(), expected);
        }
    }
}

TEST(Valuation, MultiplicativeAndUltrametric) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 500; ++i) {
        const Rational a = random_rational(rng), b = random_rational(rng);
        for (unsigned long p : {2ul, 3ul, 5ul}) {
            const Prime pr(p);
            EXPECT_EQ(valuation(a * b, pr), valuation(a, pr) + valuation(b, pr));
            EXPECT_GE(valuation(a + b, pr), std::min(valuation(a, pr), valuation(b, pr)));
            if (valuation(a, pr) != valuation(b, pr)) {
                EXPECT_EQ(valuation(a + b, pr), std::min(valuation(a, pr), valuation(b, pr)));
            }
        }
    }
}

TEST(PrimeSupport, Example) {
    const std::vector<PrimePower> expected{{2, 2}, {3, -1}, {5, -1}};
    EXPECT_EQ(prime_support(q("4/15")), expected);
    EXPECT_TRUE(prime_support(q("-1")).empty());
    EXPECT_THROW(prime_support(0), std::invalid_argument);
}

TEST(PrimeSupport, ReconstructsAbsoluteValue) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        const Rational r = random_rational(rng);
        Rational product = 1;
        for (const auto& pp : prime_support(r)) {
            EXPECT_NE(pp.exponent, 0);
            product *= pow(Rational(pp.prime), pp.exponent);
        }
        EXPECT_EQ(product, r.abs());
    }
}

TEST(PrimeSupport, LargeFactors) {
    const Integer p1("1000000007"), p2("998244353");
    const std::vector<PrimePower> expected{{p2, 1}, {p1, 2}};
    EXPECT_EQ(prime_support(Rational(p1 * p1 * p2)), expected);
}

TEST(ReduceModP, Examples) {
    EXPECT_EQ(reduce_mod_p(q("1/2"), Prime(5)), 3u);
    EXPECT_EQ(reduce_mod_p(q("-1"), Prime(7)), 6u);
    EXPECT_THROW(reduce_mod_p(q("1/5"), Prime(5)), std::domain_error);
}

TEST(ReduceModP, RingHomomorphism) {
    std::mt19937_64 rng(14);
    const Prime p(101);
    for (int i = 0; i < 500; ++i) {
        const Rational a = random_rational(rng), b = random_rational(rng);
        if (valuation(a, p).value() < 0 || valuation(b, p).value() < 0) continue;
        EXPECT_EQ(reduce_mod_p(a * b, p), reduce_mod_p(a, p) * reduce_mod_p(b, p) % 101);
        EXPECT_EQ(reduce_mod_p(a + b, p), (reduce_mod_p(a, p) + reduce_mod_p(b, p)) % 101);
    }
}

TEST(Divisors, Small) {
    const std::vector<Integer> expected{1, 2, 3, 4, 6, 12};
    EXPECT_EQ(positive_divisors(-12), expected);
}
