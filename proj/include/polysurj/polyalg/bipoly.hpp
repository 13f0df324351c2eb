#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polysurj/polyalg/unipoly.hpp"

namespace polysurj {

// Sparse bivariate polynomial over the rationals: (x-exponent, y-exponent)
// to nonzero coefficient. Changes of variables inflate degrees quickly, so
// the representation stays sparse.
class BiPoly {
public:
    using Key = std::pair<std::int64_t, std::int64_t>;

    BiPoly() = default;

    static BiPoly constant(const BigRational& c) { return monomial(c, 0, 0); }

    static BiPoly monomial(const BigRational& c, std::int64_t i, std::int64_t j) {
        BiPoly p;
        if (c != 0) p.terms_[{i, j}] = c;
        return p;
    }

    static BiPoly var_x() { return monomial(BigRational(1), 1, 0); }
    static BiPoly var_y() { return monomial(BigRational(1), 0, 1); }

    // p(x) as a bivariate polynomial
    static BiPoly from_unipoly_x(const UniPoly& p) {
        BiPoly out;
        for (std::int64_t k = 0; k <= p.degree(); ++k)
            if (p.coeff(k) != 0) out.terms_[{k, 0}] = p.coeff(k);
        return out;
    }

    static BiPoly from_unipoly_y(const UniPoly& p) {
        BiPoly out;
        for (std::int64_t k = 0; k <= p.degree(); ++k)
            if (p.coeff(k) != 0) out.terms_[{0, k}] = p.coeff(k);
        return out;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0}); }

    // -1 sentinels on the zero polynomial
    std::int64_t degree_x() const {
        std::int64_t d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, k.first);
        return d;
    }
    std::int64_t degree_y() const {
        std::int64_t d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, k.second);
        return d;
    }
    std::int64_t total_degree() const {
        std::int64_t d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
        return d;
    }

    BigRational coeff(std::int64_t i, std::int64_t j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? BigRational(0) : it->second;
    }

    const std::map<Key, BigRational>& terms() const { return terms_; }

    bool depends_on_x() const {
        for (const auto& [k, c] : terms_)
            if (k.first > 0) return true;
        return false;
    }
    bool depends_on_y() const {
        for (const auto& [k, c] : terms_)
            if (k.second > 0) return true;
        return false;
    }

    bool integer_coefficients() const {
        for (const auto& [k, c] : terms_)
            if (!is_integer(c)) return false;
        return true;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly out = a;
        for (const auto& [k, c] : b.terms_) out.add_term(k, c);
        return out;
    }

    BiPoly operator-() const {
        BiPoly out;
        for (const auto& [k, c] : terms_) out.terms_[k] = -c;
        return out;
    }

    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return out;
    }

    friend BiPoly operator*(const BigRational& c, const BiPoly& p) {
        if (c == 0) return {};
        BiPoly out = p;
        for (auto& [k, v] : out.terms_) v *= c;
        return out;
    }

    BiPoly pow(std::uint64_t e) const {
        BiPoly result = constant(BigRational(1));
        BiPoly base = *this;
        while (e) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    // coefficient of y^j, a polynomial in x
    UniPoly coeff_of_y(std::int64_t j) const {
        std::vector<BigRational> coeffs;
        for (const auto& [k, c] : terms_) {
            if (k.second != j) continue;
            if (static_cast<std::int64_t>(coeffs.size()) <= k.first)
                coeffs.resize(static_cast<std::size_t>(k.first) + 1, BigRational(0));
            coeffs[static_cast<std::size_t>(k.first)] = c;
        }
        return UniPoly::from_coeffs(std::move(coeffs));
    }

    UniPoly coeff_of_x(std::int64_t i) const { return swap_vars().coeff_of_y(i); }

    BiPoly swap_vars() const {
        BiPoly out;
        for (const auto& [k, c] : terms_) out.terms_[{k.second, k.first}] = c;
        return out;
    }

    BigRational eval(const BigRational& x, const BigRational& y) const {
        // Horner in y over cached univariate rows
        BigRational acc(0);
        const std::int64_t dy = degree_y();
        for (std::int64_t j = dy; j >= 0; --j) acc = acc * y + coeff_of_y(j).eval(x);
        return acc;
    }

    BigRational eval(const BigInt& x, const BigInt& y) const { return eval(BigRational(x), BigRational(y)); }

    // exact composition F(x_expr, y_expr)
    BiPoly substitute(const BiPoly& x_expr, const BiPoly& y_expr) const {
        BiPoly acc;
        const std::int64_t dy = degree_y();
        for (std::int64_t j = dy; j >= 0; --j) {
            BiPoly row;  // A_j(x_expr)
            const UniPoly a = coeff_of_y(j);
            for (std::int64_t i = a.degree(); i >= 0; --i)
                row = row * x_expr + constant(a.coeff(i));
            acc = acc * y_expr + row;
        }
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        // canonical order: total degree descending, then x-degree descending
        std::vector<std::pair<Key, BigRational>> ordered(terms_.begin(), terms_.end());
        std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
            const std::int64_t ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
            if (ta != tb) return ta > tb;
            return a.first.first > b.first.first;
        });
        std::string out;
        for (const auto& [k, c] : ordered) {
            const bool first = out.empty();
            if (first)
                out += (c < 0) ? "-" : "";
            else
                out += (c < 0) ? " - " : " + ";
            const BigRational mag = abs_of(c);
            std::string vars;
            if (k.first > 0) {
                vars += "x";
                if (k.first >= 2) vars += "^" + std::to_string(k.first);
            }
            if (k.second > 0) {
                if (!vars.empty()) vars += "*";
                vars += "y";
                if (k.second >= 2) vars += "^" + std::to_string(k.second);
            }
            if (vars.empty()) {
                out += to_decimal(mag);
            } else {
                if (mag != 1) out += to_decimal(mag) + "*";
                out += vars;
            }
        }
        return out;
    }

private:
    void add_term(const Key& k, const BigRational& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (c != 0) terms_[k] = c;
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    std::map<Key, BigRational> terms_;
};

inline BiPoly bi_substitute(const BiPoly& f, const BiPoly& x_expr, const BiPoly& y_expr) {
    return f.substitute(x_expr, y_expr);
}

}  // namespace polysurj
