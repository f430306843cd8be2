#pragma once

// Exact scalars: arbitrary-precision integers and rationals, primes,
// p-adic valuations and reduction into the residue field F_p.

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace belyi {

using Integer = mpz_class;

/// Fraction in lowest terms with a positive denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T value) : value_(static_cast<long>(value)) {}

    template <std::unsigned_integral T>
    Rational(T value) : value_(static_cast<unsigned long>(value)) {}

    Rational(const Integer& value) : value_(value) {}

    /// Throws std::domain_error on a zero denominator.
    Rational(const Integer& numerator, const Integer& denominator);

    /// Parses "a/b", "a", with an optional leading '-' (ASCII or U+2212).
    /// Non-canonical input such as "2/4" is accepted and reduced.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational abs() const;
    Rational inverse() const;  // throws std::domain_error on zero

    /// Canonical "a/b" or "a" form.
    std::string to_string() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Integer power with non-negative or negative exponent (negative requires base != 0).
Rational pow(const Rational& base, std::int64_t exponent);

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n);

/// A verified prime p <= kMaxPrime.
class Prime {
public:
    static constexpr std::uint64_t kMaxPrime = 1'000'000'000'000ULL;

    /// Throws std::invalid_argument when p is not a prime in range.
    explicit Prime(std::uint64_t p);

    std::uint64_t value() const { return value_; }
    Integer as_integer() const { return Integer(static_cast<unsigned long>(value_)); }

    friend auto operator<=>(const Prime&, const Prime&) = default;

private:
    std::uint64_t value_;
};

/// ν_p with the distinguished value INFINITY, which compares above every integer.
class Valuation {
public:
    constexpr explicit Valuation(std::int64_t value) : value_(value) {}
    static constexpr Valuation infinity() { return Valuation(); }

    constexpr bool is_infinite() const { return !value_.has_value(); }
    /// Throws std::logic_error on INFINITY.
    std::int64_t value() const;

    std::string to_string() const;

    friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
    friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.is_infinite() || b.is_infinite()) {
            return a.is_infinite() <=> b.is_infinite();
        }
        return *a.value_ <=> *b.value_;
    }
    friend Valuation operator+(const Valuation& a, const Valuation& b);

private:
    constexpr Valuation() = default;
    std::optional<std::int64_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// Exponent of p in q; INFINITY for q = 0.
Valuation valuation(const Rational& q, const Prime& p);

struct PrimePower {
    Integer prime;
    std::int64_t exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of |n|, n != 0, ascending by prime.
std::vector<PrimePower> factor_integer(const Integer& n);

/// Primes with nonzero valuation in q, ascending, paired with that valuation.
/// Throws std::invalid_argument for q = 0.
std::vector<PrimePower> prime_support(const Rational& q);

/// a/b -> a * b^{-1} mod p. Throws std::domain_error when ν_p(q) < 0.
std::uint64_t reduce_mod_p(const Rational& q, const Prime& p);

/// All positive divisors of |n|, n != 0, ascending.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace belyi

template <>
struct std::hash<belyi::Rational> {
    std::size_t operator()(const belyi::Rational& q) const noexcept;
};
