#pragma once

// Dense univariate polynomials over Q.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "belyi/exactnum.hpp"

namespace belyi {

/// a_0 + a_1 x + ... + a_n x^n, stored ascending with a_n != 0.
/// The empty coefficient sequence is the zero polynomial.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

    static Poly x() { return Poly{0, 1}; }
    static Poly constant(const Rational& c) { return Poly{c}; }
    static Poly monomial(const Rational& c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monomial() const;

    /// -1 for the zero polynomial.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// a_i, or zero beyond the degree.
    Rational coeff(std::size_t i) const;
    /// Leading coefficient; zero for the zero polynomial.
    Rational leading() const;
    /// Index of the lowest nonzero coefficient (multiplicity of 0 as a root).
    /// Throws std::domain_error for the zero polynomial.
    std::size_t lowest_degree() const;

    Rational evaluate(const Rational& q) const;
    /// this ∘ inner
    Poly compose(const Poly& inner) const;
    Poly derivative() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
    friend Poly operator*(Poly lhs, const Rational& c) { return lhs *= c; }
    friend Poly operator*(const Rational& c, Poly rhs) { return rhs *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Human-readable, ascending: "4*x - 4*x^2".
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& f);

Poly pow(const Poly& base, std::size_t exponent);

struct DivRem {
    Poly quotient;
    Poly remainder;
};

/// f = q*g + r with deg r < deg g. Throws std::domain_error when g = 0.
DivRem divrem(const Poly& f, const Poly& g);

/// g | f, with the convention that every nonzero g divides 0.
bool divides(const Poly& g, const Poly& f);

/// Polynomial over F_p, ascending and trimmed.
struct ModPoly {
    std::uint64_t modulus;
    std::vector<std::uint64_t> coeffs;
    friend bool operator==(const ModPoly&, const ModPoly&) = default;
};

/// Coefficientwise reduction. Throws std::domain_error if some coefficient has negative valuation.
ModPoly reduce_poly_mod_p(const Poly& f, const Prime& p);

/// Scale by the lcm of denominators and divide by the gcd of numerators:
/// an integer polynomial with content 1 and positive leading coefficient.
std::vector<Integer> primitive_integer_part(const Poly& f);

/// Distinct rational roots of f != 0 by the rational root test, ascending.
std::vector<Rational> rational_roots(const Poly& f);

}  // namespace belyi
