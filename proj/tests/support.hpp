#pragma once

#include <string>
#include <vector>

#include "belyi/poly.hpp"

namespace belyi::testing {

inline Poly poly(const std::vector<std::string>& coeffs) {
    std::vector<Rational> cs;
    for (const auto& c : coeffs) cs.push_back(Rational::parse(c));
    return Poly(std::move(cs));
}

inline Rational q(const std::string& text) { return Rational::parse(text); }

// The three polygon examples, at p = 5.
inline Poly h1() { return poly({"0", "-125", "1275", "-3375", "625"}); }  // 625 x (x - 1/5)^2 (x - 5)
inline Poly h2() { return poly({"0", "0", "25", "-3750", "78125"}); }   // 78125 x^2 (x - 1/25)(x - 1/125)
inline Poly h3() { return poly({"0", "0", "0", "0", "3125/256", "-3125/256"}); }

}  // namespace belyi::testing
