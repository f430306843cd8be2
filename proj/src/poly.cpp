#include "belyi/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace belyi {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return Poly(std::move(coeffs));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Poly::is_monomial() const {
    if (is_zero()) return false;
    return std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); }) == 1;
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

Rational Poly::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

std::size_t Poly::lowest_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return i;
    }
    throw std::domain_error("lowest degree of the zero polynomial");
}

Rational Poly::evaluate(const Rational& q) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= q;
        acc += *it;
    }
    return acc;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += Poly::constant(*it);
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(i);
    return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& a : r.coeffs_) a = -a;
    return r;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        const bool fraction = !mag.is_integer();
        if (i == 0 || !unit) os << (fraction && i > 0 ? "(" + mag.to_string() + ")" : mag.to_string());
        if (i > 0) {
            if (!unit) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.to_string(); }

Poly pow(const Poly& base, std::size_t exponent) {
    Poly result = Poly::constant(1);
    Poly square = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= square;
        exponent >>= 1U;
        if (exponent > 0) square *= square;
    }
    return result;
}

DivRem divrem(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    if (f.degree() < g.degree()) return {Poly(), f};
    std::vector<Rational> rem = f.coeffs();
    const auto& gc = g.coeffs();
    const std::size_t dg = gc.size() - 1;
    const Rational lead_inv = gc.back().inverse();
    std::vector<Rational> quot(rem.size() - dg);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational c = rem[k + dg] * lead_inv;
        if (c.is_zero()) continue;
        quot[k] = c;
        for (std::size_t j = 0; j <= dg; ++j) rem[k + j] -= c * gc[j];
    }
    rem.resize(dg);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

bool divides(const Poly& g, const Poly& f) { return divrem(f, g).remainder.is_zero(); }

ModPoly reduce_poly_mod_p(const Poly& f, const Prime& p) {
    std::vector<std::uint64_t> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(reduce_mod_p(c, p));
    while (!out.empty() && out.back() == 0) out.pop_back();
    return {p.value(), std::move(out)};
}

std::vector<Integer> primitive_integer_part(const Poly& f) {
    if (f.is_zero()) return {};
    Integer den_lcm = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<Integer> ints;
    ints.reserve(f.coeffs().size());
    Integer content = 0;
    for (const auto& c : f.coeffs()) {
        ints.push_back(c.numerator() * (den_lcm / c.denominator()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
    }
    if (ints.back() < 0) content = -content;
    for (auto& a : ints) a /= content;
    return ints;
}

namespace {

// Two word-size moduli for cheap rejection of rational-root candidates.
constexpr std::uint64_t kFilterModuli[] = {2147483647ULL, 1000000007ULL};

std::uint64_t mod_of(const Integer& v, std::uint64_t m) {
    return mpz_fdiv_ui(v.get_mpz_t(), m);
}

// Σ a_i num^i den^(n-i) mod m, by homogeneous Horner.
std::uint64_t homogeneous_mod(const std::vector<std::uint64_t>& a, std::uint64_t num, std::uint64_t den,
                              std::uint64_t m) {
    std::uint64_t acc = a.back();
    std::uint64_t den_pow = 1;
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        den_pow = den_pow * den % m;
        acc = (acc * num % m + a[k] * den_pow % m) % m;
    }
    return acc;
}

Integer homogeneous_exact(const std::vector<Integer>& a, const Integer& num, const Integer& den) {
    Integer acc = a.back();
    Integer den_pow = 1;
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        den_pow *= den;
        acc = acc * num + a[k] * den_pow;
    }
    return acc;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("rational roots of the zero polynomial");
    std::vector<Rational> roots;
    std::vector<Integer> a = primitive_integer_part(f);
    const std::size_t shift = f.lowest_degree();
    if (shift > 0) {
        roots.emplace_back(0);
        a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(shift));
    }
    if (a.size() <= 1) return roots;

    // Cauchy bound: |r| <= 1 + max |a_i / a_n|.
    Integer max_abs = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        Integer v;
        mpz_abs(v.get_mpz_t(), a[i].get_mpz_t());
        if (v > max_abs) max_abs = v;
    }
    const Integer& lead = a.back();
    Integer bound_num = max_abs + lead;  // (1 + max|a_i|/a_n) = (a_n + max)/a_n

    std::vector<std::vector<std::uint64_t>> reduced;
    for (const auto m : kFilterModuli) {
        std::vector<std::uint64_t> r;
        r.reserve(a.size());
        for (const auto& c : a) r.push_back(mod_of(c, m));
        reduced.push_back(std::move(r));
    }

    const auto nums = positive_divisors(a.front());
    const auto dens = positive_divisors(lead);
    for (const auto& den : dens) {
        for (const auto& num : nums) {
            // num/den <= bound_num/lead
            if (num * lead > bound_num * den) break;
            Integer g;
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (g != 1) continue;
            for (const int sign : {-1, 1}) {
                const Integer signed_num = sign * num;
                bool candidate = true;
                for (std::size_t k = 0; k < reduced.size() && candidate; ++k) {
                    const auto m = kFilterModuli[k];
                    candidate = homogeneous_mod(reduced[k], mod_of(signed_num, m), mod_of(den, m), m) == 0;
                }
                if (candidate && homogeneous_exact(a, signed_num, den) == 0) roots.emplace_back(signed_num, den);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace belyi
