#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polysurj/exactmath/rational.hpp"

namespace polysurj {

// Dense univariate polynomial over the rationals. Coefficient i multiplies
// t^i; the vector never stores a trailing zero, so the zero polynomial is
// the empty vector and degree() reports -1 as its sentinel.
class UniPoly {
public:
    UniPoly() = default;

    static UniPoly constant(const BigRational& c) {
        UniPoly p;
        if (c != 0) p.coeffs_.push_back(c);
        return p;
    }

    static UniPoly monomial(const BigRational& c, std::size_t k) {
        UniPoly p;
        if (c != 0) {
            p.coeffs_.assign(k + 1, BigRational(0));
            p.coeffs_[k] = c;
        }
        return p;
    }

    static UniPoly variable() { return monomial(BigRational(1), 1); }

    static UniPoly from_coeffs(std::vector<BigRational> coeffs) {
        UniPoly p;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    static UniPoly from_int_coeffs(const std::vector<std::int64_t>& coeffs) {
        std::vector<BigRational> c;
        c.reserve(coeffs.size());
        for (std::int64_t v : coeffs) c.emplace_back(v);
        return from_coeffs(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    // -1 for the zero polynomial
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

    BigRational coeff(std::int64_t k) const {
        if (k < 0 || k >= static_cast<std::int64_t>(coeffs_.size())) return BigRational(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const BigRational& leading() const {
        if (is_zero()) fail(Errc::ZeroPolynomial, "leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    BigRational constant_term() const { return coeff(0); }

    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly out;
        out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRational(0));
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
            if (i < a.coeffs_.size()) out.coeffs_[i] += a.coeffs_[i];
            if (i < b.coeffs_.size()) out.coeffs_[i] += b.coeffs_[i];
        }
        out.trim();
        return out;
    }

    UniPoly operator-() const {
        UniPoly out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        UniPoly out;
        out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        out.trim();
        return out;
    }

    friend UniPoly operator*(const BigRational& c, const UniPoly& p) {
        if (c == 0) return {};
        UniPoly out = p;
        for (auto& x : out.coeffs_) x *= c;
        return out;
    }

    UniPoly pow(std::uint64_t e) const {
        UniPoly result = constant(BigRational(1));
        UniPoly base = *this;
        while (e) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    // quotient and remainder over Q; divisor must be nonzero
    friend std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) fail(Errc::ZeroPolynomial, "polynomial division by zero");
        UniPoly r = a, q;
        const std::int64_t db = b.degree();
        if (r.degree() >= db) q.coeffs_.assign(static_cast<std::size_t>(r.degree() - db) + 1, BigRational(0));
        while (!r.is_zero() && r.degree() >= db) {
            const std::int64_t shift = r.degree() - db;
            const BigRational factor = r.leading() / b.leading();
            q.coeffs_[static_cast<std::size_t>(shift)] = factor;
            for (std::int64_t i = 0; i <= db; ++i)
                r.coeffs_[static_cast<std::size_t>(i + shift)] -= factor * b.coeffs_[static_cast<std::size_t>(i)];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divrem(a, b).first; }
    friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divrem(a, b).second; }

    UniPoly derivative() const {
        UniPoly out;
        if (coeffs_.size() <= 1) return out;
        out.coeffs_.resize(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            out.coeffs_[i - 1] = BigRational(static_cast<std::int64_t>(i)) * coeffs_[i];
        out.trim();
        return out;
    }

    BigRational eval(const BigRational& t) const {
        BigRational acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
        return acc;
    }

    BigRational eval(const BigInt& t) const { return eval(BigRational(t)); }

    UniPoly compose(const UniPoly& inner) const {
        UniPoly acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * inner + constant(coeffs_[i]);
        return acc;
    }

    bool integer_coefficients() const {
        for (const auto& c : coeffs_)
            if (!is_integer(c)) return false;
        return true;
    }

    BigInt denominator_lcm() const {
        BigInt l(1);
        for (const auto& c : coeffs_) l = lcm_of(l, den_of(c));
        return l;
    }

    UniPoly monic() const {
        if (is_zero()) fail(Errc::ZeroPolynomial, "monic of zero polynomial");
        return inverse_of(leading()) * *this;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const BigRational& c = coeffs_[i];
            if (c == 0) continue;
            const bool first = out.empty();
            if (first)
                out += (c < 0) ? "-" : "";
            else
                out += (c < 0) ? " - " : " + ";
            const BigRational mag = abs_of(c);
            if (i == 0) {
                out += to_decimal(mag);
            } else {
                if (mag != 1) out += to_decimal(mag) + "*";
                out += var;
                if (i >= 2) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigRational> coeffs_;
};

// monic gcd over Q
inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    if (a.is_zero() && b.is_zero()) fail(Errc::BothZero, "gcd of two zero polynomials");
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

struct ExtGcd {
    UniPoly gcd;  // monic
    UniPoly u, v;  // u*f + v*g == gcd
};

inline ExtGcd uni_ext_gcd(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() && g.is_zero()) fail(Errc::BothZero, "extended gcd of two zero polynomials");
    UniPoly r0 = f, r1 = g;
    UniPoly u0 = UniPoly::constant(BigRational(1)), u1;
    UniPoly v0, v1 = UniPoly::constant(BigRational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly u2 = u0 - q * u1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        UniPoly v2 = v0 - q * v1;
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    const BigRational lead = r0.leading();
    const BigRational inv = inverse_of(lead);
    return {inv * r0, inv * u0, inv * v0};
}

// gcd of integer numerators; for integer-coefficient polynomials this is
// the usual content (always positive)
inline BigInt integer_content(const UniPoly& p) {
    BigInt c(0);
    for (const auto& q : p.coeffs()) c = gcd_of(c, num_of(q));
    return c < 0 ? -c : c;
}

// integer polynomial with content 1 and positive leading coefficient,
// equal to the input up to a positive rational factor
inline UniPoly primitive_integer_part(const UniPoly& p) {
    if (p.is_zero()) fail(Errc::ZeroPolynomial, "primitive part of zero polynomial");
    UniPoly q = BigRational(p.denominator_lcm()) * p;
    BigInt content = integer_content(q);
    q = BigRational(BigInt(1), content) * q;
    if (q.leading() < 0) q = -q;
    return q;
}

// Yun's algorithm: squarefree decomposition over Q. Returns monic pairwise
// coprime squarefree factors with their multiplicities, nonconstant input
// factors only.
inline std::vector<std::pair<UniPoly, std::uint32_t>> yun_squarefree(const UniPoly& f) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "squarefree decomposition of zero");
    std::vector<std::pair<UniPoly, std::uint32_t>> out;
    if (f.is_constant()) return out;
    UniPoly fm = f.monic();
    UniPoly df = fm.derivative();
    UniPoly a = uni_gcd(fm, df);
    UniPoly b = fm / a;
    UniPoly c = df / a;
    UniPoly d = c - b.derivative();
    for (std::uint32_t i = 1; !b.is_constant(); ++i) {
        UniPoly p = uni_gcd(b, d);
        if (!p.is_constant()) out.emplace_back(p, i);
        b = b / p;
        c = d / p;
        d = c - b.derivative();
    }
    return out;
}

}  // namespace polysurj
