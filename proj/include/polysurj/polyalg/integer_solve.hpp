#pragma once

#include <algorithm>
#include <vector>

#include "polysurj/exactmath/factorization.hpp"
#include "polysurj/polyalg/unipoly.hpp"

namespace polysurj {

namespace detail {

// integer-coefficient polynomial as a plain coefficient vector for fast
// exact Horner evaluation
inline std::vector<BigInt> int_coeff_vector(const UniPoly& p) {
    std::vector<BigInt> out(static_cast<std::size_t>(p.degree() + 1));
    for (std::int64_t i = 0; i <= p.degree(); ++i) {
        const BigRational c = p.coeff(i);
        if (!is_integer(c)) fail(Errc::InvalidArgument, "integer coefficients required");
        out[static_cast<std::size_t>(i)] = num_of(c);
    }
    return out;
}

inline BigInt horner(const std::vector<BigInt>& coeffs, const BigInt& t) {
    BigInt acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
    return acc;
}

// every real root r of the polynomial satisfies |r| < bound (Cauchy)
inline BigInt cauchy_root_bound(const std::vector<BigInt>& coeffs) {
    BigInt max_low(0);
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) max_low = std::max(max_low, abs_of(coeffs[i]));
    const BigInt lead = abs_of(coeffs.back());
    return 2 + max_low / lead;
}

inline std::vector<BigInt> derivative_coeffs(const std::vector<BigInt>& coeffs) {
    std::vector<BigInt> out;
    for (std::size_t i = 1; i < coeffs.size(); ++i) out.push_back(BigInt(static_cast<std::int64_t>(i)) * coeffs[i]);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Integers m such that every real critical point r of p satisfies
// m <= r <= m+1 for one of the returned markers; between markers (and beyond
// the extreme ones) p is monotone on integer arguments. Recurses on the
// derivative to get its own monotone pieces.
inline std::vector<BigInt> critical_markers(const std::vector<BigInt>& coeffs) {
    if (coeffs.size() <= 2) return {};  // constant or linear: no critical points
    const std::vector<BigInt> d = derivative_coeffs(coeffs);
    const std::vector<BigInt> inner = critical_markers(d);
    const BigInt bound = cauchy_root_bound(d);

    std::vector<std::pair<BigInt, BigInt>> pieces;
    BigInt lo = -bound;
    for (const BigInt& m : inner) {
        if (m >= lo) {
            pieces.emplace_back(lo, std::min(m, bound));
            lo = m + 1;
        }
    }
    if (lo <= bound) pieces.emplace_back(lo, bound);

    // roots of d can share a unit interval with d's own critical points and
    // then hide in the gap between two pieces, so every inner marker is kept
    std::vector<BigInt> out = inner;
    for (const auto& [a, b] : pieces) {
        if (a > b) continue;
        const int sa = sign_of(horner(d, a));
        const int sb = sign_of(horner(d, b));
        if (sa == 0) out.push_back(a);
        if (sb == 0 && b != a) out.push_back(b);
        if (sa == 0 || sb == 0 || sa == sb) continue;
        // d is strictly monotone on the real hull of [a, b]; bracket the crossing
        BigInt x = a, y = b;
        while (y - x > 1) {
            BigInt mid = floor_div(x + y, BigInt(2));
            const int sm = sign_of(horner(d, mid));
            if (sm == sa || sm == 0)
                x = mid;
            else
                y = mid;
        }
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// all integer t with p(t) == 0 for the coefficient vector form
inline std::vector<BigInt> solve_zero(const std::vector<BigInt>& coeffs) {
    std::vector<BigInt> out;
    if (coeffs.size() <= 1) return out;  // nonzero constant (or handled by caller)
    const BigInt bound = cauchy_root_bound(coeffs);
    const std::vector<BigInt> markers = critical_markers(coeffs);

    std::vector<std::pair<BigInt, BigInt>> pieces;
    BigInt lo = -bound;
    for (const BigInt& m : markers) {
        if (m >= lo) {
            pieces.emplace_back(lo, std::min(m, bound));
            lo = m + 1;
        }
    }
    if (lo <= bound) pieces.emplace_back(lo, bound);

    for (const auto& [a, b] : pieces) {
        if (a > b) continue;
        BigInt va = horner(coeffs, a), vb = horner(coeffs, b);
        if (va == 0) out.push_back(a);
        if (vb == 0 && b != a) out.push_back(b);
        if (sign_of(va) * sign_of(vb) >= 0) continue;
        const bool increasing = va < vb;
        BigInt x = a, y = b;
        while (y - x > 1) {
            BigInt mid = floor_div(x + y, BigInt(2));
            BigInt vm = horner(coeffs, mid);
            if (vm == 0) {
                out.push_back(mid);
                break;
            }
            if ((vm < 0) == increasing)
                x = mid;
            else
                y = mid;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

// Exact integer solution set of p(t) = target for an integer-coefficient p.
// Bisection over the monotone pieces of p, so huge targets are fine.
inline std::vector<BigInt> solve_integer_equal(const UniPoly& p, const BigInt& target) {
    if (p.is_zero()) fail(Errc::ZeroPolynomial, "solve on the zero polynomial");
    std::vector<BigInt> coeffs = detail::int_coeff_vector(p);
    if (coeffs.empty()) coeffs.push_back(BigInt(0));
    coeffs[0] -= target;
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) fail(Errc::InvalidArgument, "solve with constant polynomial equal to target");
    return detail::solve_zero(coeffs);
}

// Integer roots via the rational-root candidate method: integer roots divide
// the constant term; each candidate is confirmed by exact evaluation.
inline std::vector<BigInt> integer_roots(const UniPoly& p) {
    if (p.is_zero()) fail(Errc::ZeroPolynomial, "integer roots of the zero polynomial");
    UniPoly q = BigRational(p.denominator_lcm()) * p;  // roots unchanged

    std::vector<BigInt> out;
    // strip t^k so the constant term is nonzero
    std::int64_t k = 0;
    while (q.coeff(k) == 0) ++k;
    if (k > 0) {
        out.push_back(BigInt(0));
        std::vector<BigRational> shifted;
        for (std::int64_t i = k; i <= q.degree(); ++i) shifted.push_back(q.coeff(i));
        q = UniPoly::from_coeffs(std::move(shifted));
    }
    if (q.is_constant()) {
        std::sort(out.begin(), out.end());
        return out;
    }
    const BigInt constant = num_of(q.constant_term());
    for (const BigInt& d : divisors(constant)) {
        if (q.eval(BigRational(d)) == 0) out.push_back(d);
        if (q.eval(BigRational(-d)) == 0) out.push_back(-d);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace polysurj
