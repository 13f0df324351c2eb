#pragma once

#include "polysurj/exactmath/primes.hpp"
#include "polysurj/polyalg/factor_poly.hpp"

namespace polysurj {

// Data of the cyclic cover s^n = f(t): the exponent must be an odd prime
// not dividing any zero or pole order of f, which makes the cover
// irreducible and totally ramified over every zero and pole.
struct CoverSpec {
    RationalFunction f;
    BigInt n;

    CoverSpec(RationalFunction func, BigInt exponent) : f(std::move(func)), n(std::move(exponent)) {
        if (f.is_zero() || f.is_constant()) fail(Errc::ConstantFunction, "cover of a constant function");
        if (n < 3 || !is_prime(n)) fail(Errc::InvariantViolated, "cover exponent must be a prime >= 3");
        for (const auto& [order, count] : zero_pole_structure(f)) {
            if (order != 0 && BigInt(order < 0 ? -order : order) % n == 0)
                fail(Errc::InvariantViolated,
                     "cover exponent " + n.str() + " divides a zero/pole order " + std::to_string(order));
        }
    }
};

// number of geometric points (over the algebraic closure, infinity
// included) where f has a zero or pole
inline std::int64_t branch_point_count(const RationalFunction& f) {
    std::int64_t k = 0;
    for (const auto& [order, count] : zero_pole_structure(f))
        if (order != 0) k += count;
    return k;
}

// smallest prime >= 3 dividing no zero/pole order of f
inline BigInt choose_cover_exponent(const RationalFunction& f) {
    if (f.is_zero() || f.is_constant()) fail(Errc::ConstantFunction, "cover exponent of a constant function");
    const auto structure = zero_pole_structure(f);
    for (BigInt n(3);; n = next_prime(n)) {
        bool admissible = true;
        for (const auto& [order, count] : structure) {
            if (order != 0 && BigInt(order < 0 ? -order : order) % n == 0) {
                admissible = false;
                break;
            }
        }
        if (admissible) return n;
    }
}

// Genus of the cover s^n = f(t) with k branch points: every branch point is
// totally ramified, so Riemann-Hurwitz collapses to g = (k-2)(n-1)/2.
inline BigInt cyclic_cover_genus(const CoverSpec& spec) {
    const std::int64_t k = branch_point_count(spec.f);
    if (k < 2) fail(Errc::InvariantViolated, "fewer than two branch points");
    const BigInt doubled = BigInt(k - 2) * (spec.n - 1);
    if (doubled % 2 != 0) fail(Errc::InvariantViolated, "genus formula produced a half-integer");
    return doubled / 2;
}

}  // namespace polysurj
