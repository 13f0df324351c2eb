#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "polysurj/exactmath/primes.hpp"

namespace polysurj {

// Prime-power decomposition with a unit sign: n = unit * prod p_i^e_i,
// primes strictly increasing.
struct Factorization {
    int unit = 1;
    std::vector<std::pair<BigInt, std::uint32_t>> factors;

    BigInt reconstruct() const {
        BigInt n = unit;
        for (const auto& [p, e] : factors) n *= pow_of(p, e);
        return n;
    }
};

namespace detail {

inline void split_into(const BigInt& m, std::map<BigInt, std::uint32_t>& out) {
    if (m == 1) return;
    if (is_prime(m)) {
        ++out[m];
        return;
    }
    BigInt d = pollard_rho(m);
    split_into(d, out);
    split_into(m / d, out);
}

}  // namespace detail

inline Factorization factorize(const BigInt& n) {
    if (n == 0) fail(Errc::ZeroInput, "factorize(0)");
    if (abs_of(n) >= miller_rabin_proof_bound())
        fail(Errc::FactorizationTooHard, "input exceeds the deterministic primality range");

    Factorization result;
    result.unit = n < 0 ? -1 : 1;
    BigInt m = abs_of(n);

    std::map<BigInt, std::uint32_t> exponents;
    for (std::uint32_t p : small_primes()) {
        if (BigInt(p) * p > m) break;
        while (m % p == 0) {
            m /= p;
            ++exponents[BigInt(p)];
        }
    }
    if (m > 1) {
        // m has no prime factor below 10^6; either it is prime or rho splits it
        if (m <= BigInt(kTrialDivisionLimit) * kTrialDivisionLimit || is_prime(m))
            ++exponents[m];
        else
            detail::split_into(m, exponents);
    }
    result.factors.assign(exponents.begin(), exponents.end());
    return result;
}

// Positive divisors of |n|, ascending.
inline std::vector<BigInt> divisors(const BigInt& n) {
    if (n == 0) fail(Errc::ZeroInput, "divisors(0)");
    Factorization f = factorize(n);
    std::vector<BigInt> out{BigInt(1)};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base_count = out.size();
        BigInt power = 1;
        for (std::uint32_t k = 1; k <= e; ++k) {
            power *= p;
            for (std::size_t i = 0; i < base_count; ++i) out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_squarefree(const BigInt& n) {
    if (n == 0) return false;
    for (const auto& [p, e] : factorize(n).factors)
        if (e > 1) return false;
    return true;
}

}  // namespace polysurj
