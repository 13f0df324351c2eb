#pragma once

#include <cstdint>
#include <vector>

#include "polysurj/exactmath/bigint.hpp"

namespace polysurj {

inline constexpr std::uint32_t kTrialDivisionLimit = 1'000'000;

// Bound below which the fixed Miller-Rabin base set {2,...,41} is a proof
// of primality (Sorenson-Webster): 3.317e24.
inline const BigInt& miller_rabin_proof_bound() {
    static const BigInt bound("3317044064679887385961981");
    return bound;
}

inline const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialDivisionLimit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t p = 2; p <= kTrialDivisionLimit; ++p) {
            if (composite[p]) continue;
            out.push_back(p);
            for (std::uint64_t m = static_cast<std::uint64_t>(p) * p; m <= kTrialDivisionLimit; m += p)
                composite[static_cast<std::size_t>(m)] = true;
        }
        return out;
    }();
    return primes;
}

namespace detail {

inline bool miller_rabin_witness(const BigInt& n, const BigInt& n_minus_1, const BigInt& odd_part,
                                 std::uint64_t two_exp, const BigInt& base) {
    BigInt x = boost::multiprecision::powm(base, odd_part, n);
    if (x == 1 || x == n_minus_1) return false;
    for (std::uint64_t i = 1; i < two_exp; ++i) {
        x = (x * x) % n;
        if (x == n_minus_1) return false;
    }
    return true;  // composite for sure
}

}  // namespace detail

// Deterministic primality for |n| below miller_rabin_proof_bound(); larger
// inputs are rejected as FactorizationTooHard rather than answered
// probabilistically.
inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n >= miller_rabin_proof_bound())
        fail(Errc::FactorizationTooHard, "primality test input exceeds deterministic range");
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt n_minus_1 = n - 1;
    BigInt odd_part = n_minus_1;
    std::uint64_t two_exp = 0;
    while (odd_part % 2 == 0) {
        odd_part >>= 1;
        ++two_exp;
    }
    for (std::uint32_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u}) {
        if (detail::miller_rabin_witness(n, n_minus_1, odd_part, two_exp, BigInt(a))) return false;
    }
    return true;
}

// Smallest prime strictly greater than n (within the deterministic range).
inline BigInt next_prime(BigInt n) {
    if (n < 2) return BigInt(2);
    ++n;
    if (n % 2 == 0) ++n;
    while (!is_prime(n)) n += 2;
    return n;
}

// Brent-cycle Pollard rho. Returns a nontrivial factor of composite odd n.
inline BigInt pollard_rho(const BigInt& n) {
    if (n % 2 == 0) return BigInt(2);
    for (std::uint32_t c = 1;; ++c) {
        const BigInt addend = c;
        auto step = [&](const BigInt& v) { return (v * v + addend) % n; };
        BigInt y = 2, d = 1, x, ys;
        std::uint64_t r = 1;
        constexpr std::uint64_t kBatch = 128;
        while (d == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = step(y);
            std::uint64_t k = 0;
            while (k < r && d == 1) {
                ys = y;
                BigInt q = 1;
                const std::uint64_t lim = std::min<std::uint64_t>(kBatch, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = step(y);
                    q = (q * abs_of(x - y)) % n;
                }
                d = gcd_of(q, n);
                k += lim;
            }
            r *= 2;
        }
        if (d == n) {
            // batched gcd overshot the meeting point; replay one step at a time
            d = 1;
            while (d == 1) {
                ys = step(ys);
                d = gcd_of(abs_of(x - ys), n);
            }
        }
        if (d != n) return d;
    }
}

}  // namespace polysurj
