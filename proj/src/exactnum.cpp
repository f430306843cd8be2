#include "belyi/exactnum.hpp"

#include <algorithm>
#include <stdexcept>

namespace belyi {

namespace {

constexpr unsigned long kTrialDivisionBound = 100'000;

bool is_ascii_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Integer parse_natural(std::string_view digits, std::string_view whole) {
    if (!is_ascii_digits(digits)) {
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    return Integer(std::string(digits), 10);
}

// Pollard–Brent rho; n is odd, composite and has no factor below the trial bound.
Integer find_factor(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        const auto step = [&](const Integer& v) {
            Integer r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        unsigned long r = 1;
        constexpr unsigned long m = 128;
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = step(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = step(y);
                    Integer diff = abs(x - y);
                    q = q * diff;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const Integer& n, std::vector<Integer>& primes) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 50) > 0) {
        primes.push_back(n);
        return;
    }
    const Integer d = find_factor(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string_view whole = text;
    bool negative = false;
    static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
    if (text.starts_with('-')) {
        negative = true;
        text.remove_prefix(1);
    } else if (text.starts_with(kUnicodeMinus)) {
        negative = true;
        text.remove_prefix(kUnicodeMinus.size());
    }
    Integer num, den = 1;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num = parse_natural(text.substr(0, slash), whole);
        den = parse_natural(text.substr(slash + 1), whole);
    } else {
        num = parse_natural(text, whole);
    }
    if (den == 0) {
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "' has zero denominator");
    }
    if (negative) num = -num;
    return Rational(num, den);
}

Rational Rational::abs() const {
    Rational r;
    mpq_abs(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(denominator(), numerator());
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}
Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Rational pow(const Rational& base, std::int64_t exponent) {
    if (exponent < 0) return pow(base.inverse(), -exponent);
    Integer num, den;
    const auto e = static_cast<unsigned long>(exponent);
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
    return Rational(num, den);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Prime::Prime(std::uint64_t p) : value_(p) {
    if (p > kMaxPrime) {
        throw std::invalid_argument("prime out of supported range: " + std::to_string(p));
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("not a prime: " + std::to_string(p));
    }
}

std::int64_t Valuation::value() const {
    if (!value_) throw std::logic_error("valuation is INFINITY");
    return *value_;
}

std::string Valuation::to_string() const { return value_ ? std::to_string(*value_) : "INFINITY"; }

Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
    return Valuation(a.value() + b.value());
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

Valuation valuation(const Rational& q, const Prime& p) {
    if (q.is_zero()) return Valuation::infinity();
    const Integer prime = p.as_integer();
    Integer rest;
    const auto up = mpz_remove(rest.get_mpz_t(), q.numerator().get_mpz_t(), prime.get_mpz_t());
    const auto down = mpz_remove(rest.get_mpz_t(), q.denominator().get_mpz_t(), prime.get_mpz_t());
    return Valuation(static_cast<std::int64_t>(up) - static_cast<std::int64_t>(down));
}

std::vector<PrimePower> factor_integer(const Integer& n) {
    if (n == 0) throw std::invalid_argument("factorization of zero");
    Integer m;
    mpz_abs(m.get_mpz_t(), n.get_mpz_t());
    std::vector<PrimePower> out;
    const auto take = [&](const Integer& prime) {
        Integer rest;
        const auto e = mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), prime.get_mpz_t());
        if (e > 0) {
            out.push_back({prime, static_cast<std::int64_t>(e)});
            m = rest;
        }
    };
    take(Integer(2));
    for (unsigned long d = 3; d < kTrialDivisionBound && m > 1; d += 2) {
        if (Integer(d) * d > m) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), d)) take(Integer(d));
    }
    if (m > 1) {
        std::vector<Integer> primes;
        factor_into(m, primes);
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        for (const auto& prime : primes) take(prime);
    }
    return out;
}

std::vector<PrimePower> prime_support(const Rational& q) {
    if (q.is_zero()) throw std::invalid_argument("prime support of zero");
    auto up = factor_integer(q.numerator());
    auto down = factor_integer(q.denominator());
    for (auto& pp : down) pp.exponent = -pp.exponent;
    std::vector<PrimePower> out;
    std::merge(up.begin(), up.end(), down.begin(), down.end(), std::back_inserter(out),
               [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return out;
}

std::uint64_t reduce_mod_p(const Rational& q, const Prime& p) {
    if (valuation(q, p) < Valuation(0)) {
        throw std::domain_error("reduction of " + q.to_string() + " mod " + std::to_string(p.value()) +
                                ": negative valuation");
    }
    const Integer prime = p.as_integer();
    Integer inv, r;
    mpz_invert(inv.get_mpz_t(), q.denominator().get_mpz_t(), prime.get_mpz_t());
    r = q.numerator() * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), prime.get_mpz_t());
    return r.get_ui();
}

std::vector<Integer> positive_divisors(const Integer& n) {
    std::vector<Integer> divisors{Integer(1)};
    for (const auto& [prime, exponent] : factor_integer(n)) {
        const std::size_t count = divisors.size();
        Integer power = 1;
        for (std::int64_t e = 1; e <= exponent; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * power);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

}  // namespace belyi

std::size_t std::hash<belyi::Rational>::operator()(const belyi::Rational& q) const noexcept {
    const std::hash<std::string> h;
    return h(q.numerator().get_str(16)) * 1000003u ^ h(q.denominator().get_str(16));
}
