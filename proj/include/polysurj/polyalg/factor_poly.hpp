#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "polysurj/exactmath/primes.hpp"
#include "polysurj/polyalg/rational_function.hpp"
#include "polysurj/polyalg/unipoly.hpp"

namespace polysurj {

namespace modp {

// dense polynomial over F_p, little-endian, coefficients in [0, p), no
// trailing zeros
using Poly = std::vector<BigInt>;

inline void normalize(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::int64_t deg(const Poly& a) { return static_cast<std::int64_t>(a.size()) - 1; }

inline BigInt inv_mod(const BigInt& a, const BigInt& p) { return boost::multiprecision::powm(a, p - 2, p); }

inline Poly add(const Poly& a, const Poly& b, const BigInt& p) {
    Poly out(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] += b[i];
        out[i] %= p;
    }
    normalize(out);
    return out;
}

inline Poly sub(const Poly& a, const Poly& b, const BigInt& p) {
    Poly out(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        BigInt v = (i < a.size() ? a[i] : BigInt(0)) - (i < b.size() ? b[i] : BigInt(0));
        out[i] = mod_euclid(v, p);
    }
    normalize(out);
    return out;
}

inline Poly mul(const Poly& a, const Poly& b, const BigInt& p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    for (auto& c : out) c %= p;
    normalize(out);
    return out;
}

inline Poly scale(const Poly& a, const BigInt& c, const BigInt& p) {
    Poly out = a;
    for (auto& x : out) x = (x * c) % p;
    normalize(out);
    return out;
}

inline Poly make_monic(const Poly& a, const BigInt& p) {
    if (a.empty()) return a;
    return scale(a, inv_mod(a.back(), p), p);
}

inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, const BigInt& p) {
    const BigInt lead_inv = inv_mod(b.back(), p);
    Poly q;
    if (deg(a) >= deg(b)) q.assign(static_cast<std::size_t>(deg(a) - deg(b)) + 1, BigInt(0));
    while (deg(a) >= deg(b)) {
        const std::size_t shift = static_cast<std::size_t>(deg(a) - deg(b));
        const BigInt factor = (a.back() * lead_inv) % p;
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = mod_euclid(a[shift + i] - factor * b[i], p);
        normalize(a);
    }
    normalize(q);
    return {std::move(q), std::move(a)};
}

inline Poly rem(Poly a, const Poly& b, const BigInt& p) { return divmod(std::move(a), b, p).second; }

inline Poly gcd(Poly a, Poly b, const BigInt& p) {
    while (!b.empty()) {
        Poly r = rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, const BigInt& p) {
    return rem(mul(a, b, p), f, p);
}

inline Poly powmod(Poly base, BigInt e, const Poly& f, const BigInt& p) {
    Poly result{BigInt(1)};
    base = rem(std::move(base), f, p);
    while (e > 0) {
        if (e % 2 == 1) result = mulmod(result, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

inline Poly derivative(const Poly& a, const BigInt& p) {
    Poly out;
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back((BigInt(static_cast<std::int64_t>(i)) * a[i]) % p);
    normalize(out);
    return out;
}

// nullspace basis of (M - I) where column i of M is x^{p*i} mod f;
// dimension equals the number of irreducible factors of f
inline std::vector<Poly> berlekamp_nullspace(const Poly& f, const BigInt& p) {
    const std::size_t n = static_cast<std::size_t>(deg(f));
    Poly x{BigInt(0), BigInt(1)};
    const Poly xp = powmod(x, p, f, p);
    std::vector<Poly> cols(n);
    cols[0] = Poly{BigInt(1)};
    for (std::size_t i = 1; i < n; ++i) cols[i] = mulmod(cols[i - 1], xp, f, p);

    // A[row][col] = coeff_row(cols[col]) - [row == col]
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t row = 0; row < n; ++row) {
            BigInt v = row < cols[col].size() ? cols[col][row] : BigInt(0);
            if (row == col) v -= 1;
            a[row][col] = mod_euclid(v, p);
        }
    }

    // row-reduce, recording pivot columns
    std::vector<std::int64_t> pivot_of_col(n, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t sel = rank;
        while (sel < n && a[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(a[sel], a[rank]);
        const BigInt inv = inv_mod(a[rank][col], p);
        for (std::size_t j = 0; j < n; ++j) a[rank][j] = (a[rank][j] * inv) % p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            const BigInt factor = a[i][col];
            for (std::size_t j = 0; j < n; ++j) a[i][j] = mod_euclid(a[i][j] - factor * a[rank][j], p);
        }
        pivot_of_col[col] = static_cast<std::int64_t>(rank);
        ++rank;
    }

    std::vector<Poly> basis;
    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] != -1) continue;
        Poly v(n, BigInt(0));
        v[col] = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (pivot_of_col[c] == -1) continue;
            v[c] = mod_euclid(-a[static_cast<std::size_t>(pivot_of_col[c])][col], p);
        }
        normalize(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

// monic irreducible factors of a monic squarefree f over F_p (p odd)
inline std::vector<Poly> berlekamp_factor(const Poly& f, const BigInt& p) {
    if (deg(f) <= 1) return {f};
    const std::vector<Poly> basis = berlekamp_nullspace(f, p);
    const std::size_t r = basis.size();
    std::vector<Poly> factors{f};
    if (r == 1) return factors;

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);  // fixed seed: deterministic output
    std::uniform_int_distribution<std::uint64_t> dist;
    const BigInt half = (p - 1) / 2;
    std::size_t rounds = 0;
    while (factors.size() < r) {
        if (++rounds > 4096) fail(Errc::FactorizationTooHard, "Berlekamp splitting stalled");
        // random element of the Berlekamp subalgebra
        Poly h;
        for (const Poly& b : basis) h = add(h, scale(b, BigInt(dist(rng)) % p, p), p);
        if (deg(h) < 1) continue;
        std::vector<Poly> next;
        for (const Poly& u : factors) {
            if (deg(u) <= 1) {
                next.push_back(u);
                continue;
            }
            const Poly hu = rem(h, u, p);
            Poly g;
            if (!hu.empty()) {
                g = gcd(u, hu, p);  // catches components where h vanishes
                if (deg(g) <= 0 || deg(g) >= deg(u)) {
                    const Poly w = powmod(hu, half, u, p);
                    g = gcd(u, sub(w, Poly{BigInt(1)}, p), p);
                }
            }
            if (g.empty() || deg(g) <= 0 || deg(g) >= deg(u)) {
                next.push_back(u);
                continue;
            }
            Poly cofactor = make_monic(divmod(u, g, p).first, p);
            next.push_back(std::move(g));
            next.push_back(std::move(cofactor));
        }
        factors = std::move(next);
    }
    return factors;
}

}  // namespace modp

namespace detail {

inline BigInt poly_height(const UniPoly& p) {
    BigInt h(0);
    for (const auto& c : p.coeffs()) h = std::max(h, abs_of(num_of(c)));
    return h;
}

// Zassenhaus with a single prime exceeding twice the factor-coefficient
// bound, so candidate factors lift directly from their symmetric residues.
inline std::vector<UniPoly> factor_squarefree_primitive(const UniPoly& f) {
    const std::int64_t n = f.degree();
    if (n == 1) return {f};
    if (n > 30) fail(Errc::FactorizationTooHard, "degree above the supported factorization limit");
    const BigInt height = poly_height(f);
    if (height > 1'000'000) fail(Errc::FactorizationTooHard, "height above the supported factorization limit");

    const BigInt lc = num_of(f.leading());
    // factor-coefficient bound: sqrt(n+1) * 2^n * height * |lc|
    const BigInt bound = (isqrt_of(BigInt(n + 1)) + 1) * pow_of(BigInt(2), static_cast<std::uint64_t>(n)) *
                         std::max(height, BigInt(1)) * abs_of(lc);

    // choose a prime with squarefree reduction that keeps the leading
    // coefficient a unit
    BigInt p = next_prime(2 * bound);
    modp::Poly fbar;
    for (;;) {
        if (lc % p != 0) {
            fbar.clear();
            for (std::int64_t i = 0; i <= n; ++i) fbar.push_back(mod_euclid(num_of(f.coeff(i)), p));
            modp::normalize(fbar);
            if (modp::deg(fbar) == n) {
                modp::Poly d = modp::derivative(fbar, p);
                if (!d.empty() && modp::deg(modp::gcd(fbar, d, p)) == 0) break;
            }
        }
        p = next_prime(p);
    }

    std::vector<modp::Poly> modular = modp::berlekamp_factor(modp::make_monic(fbar, p), p);
    std::sort(modular.begin(), modular.end(), [](const modp::Poly& a, const modp::Poly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });

    auto lift_symmetric = [&p](const BigInt& c) { return c * 2 > p ? c - p : c; };

    std::vector<UniPoly> result;
    UniPoly current = f;
    std::size_t budget = 200'000;
    std::size_t subset_size = 1;
    while (2 * subset_size <= modular.size()) {
        bool found = false;
        std::vector<std::size_t> idx(subset_size);
        for (std::size_t i = 0; i < subset_size; ++i) idx[i] = i;
        auto next_combination = [&]() -> bool {
            std::size_t i = subset_size;
            while (i > 0) {
                --i;
                if (idx[i] != i + modular.size() - subset_size) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < subset_size; ++j) idx[j] = idx[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        do {
            if (budget-- == 0) fail(Errc::FactorizationTooHard, "factor recombination budget exhausted");
            modp::Poly prod{mod_euclid(num_of(current.leading()), p)};
            for (std::size_t i : idx) prod = modp::mul(prod, modular[i], p);
            std::vector<BigRational> lifted(prod.size());
            for (std::size_t i = 0; i < prod.size(); ++i) lifted[i] = BigRational(lift_symmetric(prod[i]));
            UniPoly candidate = UniPoly::from_coeffs(std::move(lifted));
            if (candidate.is_constant()) continue;
            candidate = primitive_integer_part(candidate);
            auto [q, r] = divrem(current, candidate);
            if (!r.is_zero()) continue;
            result.push_back(candidate);
            current = primitive_integer_part(q);
            std::vector<modp::Poly> remaining;
            for (std::size_t i = 0, k = 0; i < modular.size(); ++i) {
                if (k < idx.size() && idx[k] == i) {
                    ++k;
                    continue;
                }
                remaining.push_back(modular[i]);
            }
            modular = std::move(remaining);
            found = true;
            break;
        } while (next_combination());
        if (!found) ++subset_size;
    }
    if (current.degree() >= 1) result.push_back(primitive_integer_part(current));
    return result;
}

}  // namespace detail

// Irreducible factorization over Q: rational content times primitive
// integer factors with positive leading coefficients.
struct QFactorization {
    BigRational content;
    std::vector<std::pair<UniPoly, std::uint32_t>> factors;
};

// canonical factor order: degree, then coefficients from the constant term up
inline bool factor_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::int64_t i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
}

inline QFactorization factor_over_q(const UniPoly& f) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "factorization of the zero polynomial");
    QFactorization out;
    if (f.is_constant()) {
        out.content = f.constant_term();
        return out;
    }
    for (const auto& [sqfree, mult] : yun_squarefree(f)) {
        const UniPoly part = primitive_integer_part(sqfree);
        for (UniPoly& irreducible : detail::factor_squarefree_primitive(part))
            out.factors.emplace_back(std::move(irreducible), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return factor_less(a.first, b.first); });
    UniPoly product = UniPoly::constant(BigRational(1));
    for (const auto& [fac, mult] : out.factors) product = product * fac.pow(mult);
    out.content = f.leading() / product.leading();
    if (out.content * product != f) fail(Errc::InvariantViolated, "factorization failed reconstruction");
    return out;
}

// One row of the zero/pole table: an irreducible factor (or the point at
// infinity), the number of geometric points it represents, and the common
// order of f at those points.
struct PointClass {
    std::optional<UniPoly> minimal_poly;  // nullopt marks the point at infinity
    std::int64_t degree = 1;
    std::int64_t order = 0;
    bool at_infinity() const { return !minimal_poly.has_value(); }
};

inline std::vector<PointClass> zero_pole_orders(const RationalFunction& f) {
    if (f.is_zero()) fail(Errc::ZeroFunction, "zero/pole orders of the zero function");
    std::vector<PointClass> out;
    for (const auto& [factor, mult] : factor_over_q(f.num()).factors)
        out.push_back({factor, factor.degree(), static_cast<std::int64_t>(mult)});
    for (const auto& [factor, mult] : factor_over_q(f.den()).factors)
        out.push_back({factor, factor.degree(), -static_cast<std::int64_t>(mult)});
    std::sort(out.begin(), out.end(), [](const PointClass& a, const PointClass& b) {
        return factor_less(*a.minimal_poly, *b.minimal_poly);
    });
    const std::int64_t at_infinity = f.order_at_infinity();
    if (at_infinity != 0) out.push_back({std::nullopt, 1, at_infinity});

    std::int64_t weighted_sum = 0;
    for (const PointClass& pc : out) weighted_sum += pc.degree * pc.order;
    if (weighted_sum != 0) fail(Errc::InvariantViolated, "zero/pole degree sum is nonzero");
    return out;
}

// Squarefree-only view: (order, geometric point count) pairs, infinity
// included when its order is nonzero. Enough for genus and cover-exponent
// computations without any irreducible factorization.
inline std::vector<std::pair<std::int64_t, std::int64_t>> zero_pole_structure(const RationalFunction& f) {
    if (f.is_zero()) fail(Errc::ZeroFunction, "zero/pole structure of the zero function");
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& [sqfree, mult] : yun_squarefree(f.num()))
        out.emplace_back(static_cast<std::int64_t>(mult), sqfree.degree());
    for (const auto& [sqfree, mult] : yun_squarefree(f.den()))
        out.emplace_back(-static_cast<std::int64_t>(mult), sqfree.degree());
    const std::int64_t at_infinity = f.order_at_infinity();
    if (at_infinity != 0) out.emplace_back(at_infinity, 1);
    return out;
}

}  // namespace polysurj
