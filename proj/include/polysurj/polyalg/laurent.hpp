#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "polysurj/polyalg/unipoly.hpp"

namespace polysurj {

// Sparse Laurent polynomial in one variable with coefficients in an exact
// ring (BigRational by default, QuadraticNumber for the real-quadratic
// asymptotics work). Exponents may be negative; zero coefficients are never
// stored.
template <class Coeff = BigRational>
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(const Coeff& c, std::int64_t exponent) {
        LaurentPoly p;
        if (!(c == Coeff{})) p.terms_[exponent] = c;
        return p;
    }

    static LaurentPoly constant(const Coeff& c) { return monomial(c, 0); }

    static LaurentPoly variable() { return monomial(Coeff(BigRational(1)), 1); }

    static LaurentPoly from_unipoly(const UniPoly& p) {
        LaurentPoly out;
        for (std::int64_t k = 0; k <= p.degree(); ++k) {
            BigRational c = p.coeff(k);
            if (c != 0) out.terms_[k] = Coeff(c);
        }
        return out;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

    // lowest exponent; zero input is an error
    std::int64_t ord() const {
        if (is_zero()) fail(Errc::ZeroPolynomial, "ord of zero Laurent polynomial");
        return terms_.begin()->first;
    }

    // highest exponent; zero input is an error
    std::int64_t deg() const {
        if (is_zero()) fail(Errc::ZeroPolynomial, "deg of zero Laurent polynomial");
        return terms_.rbegin()->first;
    }

    Coeff coeff(std::int64_t exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Coeff{} : it->second;
    }

    const std::map<std::int64_t, Coeff>& terms() const { return terms_; }

    bool polynomial_part_only() const { return terms_.empty() || terms_.begin()->first >= 0; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }

    LaurentPoly operator-() const {
        LaurentPoly out;
        for (const auto& [e, c] : terms_) out.terms_[e] = -c;
        return out;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }

    friend LaurentPoly operator*(const Coeff& c, const LaurentPoly& p) {
        return LaurentPoly::constant(c) * p;
    }

    LaurentPoly pow(std::uint64_t e) const {
        LaurentPoly result = constant(Coeff(BigRational(1)));
        LaurentPoly base = *this;
        while (e) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // value at a nonzero scalar point
    Coeff eval(const Coeff& t) const {
        Coeff acc{};
        Coeff inv_t{};
        bool have_inv = false;
        for (const auto& [e, c] : terms_) {
            Coeff power(BigRational(1));
            if (e >= 0) {
                for (std::int64_t i = 0; i < e; ++i) power = power * t;
            } else {
                if (!have_inv) {
                    inv_t = Coeff(BigRational(1)) / t;
                    have_inv = true;
                }
                for (std::int64_t i = 0; i < -e; ++i) power = power * inv_t;
            }
            acc = acc + c * power;
        }
        return acc;
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += "(" + coeff_str(it->second) + ")";
            if (it->first != 0) out += "*" + var + "^" + std::to_string(it->first);
        }
        return out;
    }

private:
    static std::string coeff_str(const BigRational& c) { return to_decimal(c); }
    template <class C>
    static std::string coeff_str(const C& c) {
        return c.str();
    }

    void add_term(std::int64_t e, const Coeff& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!(c == Coeff{})) terms_[e] = c;
            return;
        }
        it->second = it->second + c;
        if (it->second == Coeff{}) terms_.erase(it);
    }

    std::map<std::int64_t, Coeff> terms_;
};

// p(f) for a rational-coefficient polynomial p and Laurent argument f
template <class Coeff>
LaurentPoly<Coeff> substitute_into(const UniPoly& p, const LaurentPoly<Coeff>& f) {
    LaurentPoly<Coeff> acc;
    for (std::int64_t i = p.degree(); i >= 0; --i)
        acc = acc * f + LaurentPoly<Coeff>::constant(Coeff(p.coeff(i)));
    return acc;
}

}  // namespace polysurj
