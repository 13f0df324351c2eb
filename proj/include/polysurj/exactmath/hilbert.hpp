#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "polysurj/exactmath/factorization.hpp"
#include "polysurj/exactmath/rational.hpp"

namespace polysurj {

// A place of Q: either the real place or a finite prime. The real place is
// its own variant, not a sentinel prime.
class Place {
public:
    static Place infinity() { return Place(); }

    static Place at(const BigInt& p) {
        if (!is_prime(p)) fail(Errc::InvalidArgument, "place must be prime: " + p.str());
        Place v;
        v.infinite_ = false;
        v.prime_ = p;
        return v;
    }

    bool is_infinite() const { return infinite_; }
    const BigInt& prime() const { return prime_; }

    bool operator==(const Place& o) const {
        return infinite_ == o.infinite_ && (infinite_ || prime_ == o.prime_);
    }
    // finite primes ascending, the real place last
    bool operator<(const Place& o) const {
        if (infinite_ != o.infinite_) return !infinite_;
        return !infinite_ && prime_ < o.prime_;
    }

    std::string str() const { return infinite_ ? "infinity" : prime_.str(); }

private:
    Place() = default;
    bool infinite_ = true;
    BigInt prime_ = 0;
};

// Jacobi symbol (a|n) for odd positive n.
inline int jacobi_symbol(BigInt a, BigInt n) {
    if (n <= 0 || n % 2 == 0) fail(Errc::InvalidArgument, "jacobi: modulus must be odd positive");
    a = mod_euclid(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            BigInt r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

namespace detail {

inline std::int64_t valuation(BigInt m, const BigInt& p) {
    std::int64_t v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

// p-adic valuation and the unit part u = a / p^v as a rational with
// numerator and denominator prime to p.
struct PadicParts {
    std::int64_t val;
    BigInt unit_num;  // positive-or-negative, prime to p
    BigInt unit_den;  // positive, prime to p
};

inline PadicParts padic_parts(const BigRational& a, const BigInt& p) {
    BigInt n = num_of(a), d = den_of(a);
    std::int64_t vn = valuation(abs_of(n), p), vd = valuation(d, p);
    for (std::int64_t i = 0; i < vn; ++i) n /= p;
    for (std::int64_t i = 0; i < vd; ++i) d /= p;
    return {vn - vd, n, d};
}

// unit rational modulo 8 (denominator odd, hence self-inverse mod 8)
inline std::int64_t unit_mod8(const BigInt& num, const BigInt& den) {
    return static_cast<std::int64_t>(mod_euclid(num * den, BigInt(8)));
}

inline int eps2(std::int64_t u_mod8) { return (u_mod8 % 4 == 3) ? 1 : 0; }
inline int omega2(std::int64_t u_mod8) { return (u_mod8 == 3 || u_mod8 == 5) ? 1 : 0; }

inline int legendre_of_unit(const BigInt& num, const BigInt& den, const BigInt& p) {
    // (num/den | p) = (num|p) * (den|p) since den is a unit
    return jacobi_symbol(num, p) * jacobi_symbol(den, p);
}

}  // namespace detail

// Local Hilbert symbol (a, b)_v in {+1, -1}.
inline int hilbert_symbol(const BigRational& a, const BigRational& b, const Place& v) {
    if (a == 0 || b == 0) fail(Errc::ZeroArgument, "hilbert_symbol with zero argument");
    if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;

    const BigInt& p = v.prime();
    auto pa = detail::padic_parts(a, p);
    auto pb = detail::padic_parts(b, p);
    const std::int64_t alpha = pa.val, beta = pb.val;

    if (p == 2) {
        std::int64_t u = detail::unit_mod8(pa.unit_num, pa.unit_den);
        std::int64_t w = detail::unit_mod8(pb.unit_num, pb.unit_den);
        const int alpha_par = (alpha % 2 != 0) ? 1 : 0;
        const int beta_par = (beta % 2 != 0) ? 1 : 0;
        int exponent = detail::eps2(u) * detail::eps2(w) + alpha_par * detail::omega2(w) +
                       beta_par * detail::omega2(u);
        return (exponent % 2 == 0) ? 1 : -1;
    }

    int result = 1;
    if ((alpha % 2) && (beta % 2) && ((p - 1) / 2) % 2 == 1) result = -result;
    if (beta % 2) result *= detail::legendre_of_unit(pa.unit_num, pa.unit_den, p);
    if (alpha % 2) result *= detail::legendre_of_unit(pb.unit_num, pb.unit_den, p);
    return result;
}

struct HilbertReport {
    std::vector<Place> failures;  // places with symbol -1, sorted
    bool solvable_everywhere() const { return failures.empty(); }
};

// Evaluates the symbol at the real place, at 2, and at every odd prime
// dividing a numerator or denominator of a or b; the symbol is +1 at all
// other places.
inline HilbertReport hilbert_global_check(const BigRational& a, const BigRational& b) {
    if (a == 0 || b == 0) fail(Errc::ZeroArgument, "hilbert_global_check with zero argument");
    std::set<Place> places{Place::infinity(), Place::at(BigInt(2))};
    for (const BigRational* q : {&a, &b}) {
        for (const BigInt& part : {num_of(*q), den_of(*q)}) {
            if (abs_of(part) == 1) continue;
            for (const auto& [prime, exp] : factorize(part).factors)
                if (prime != 2) places.insert(Place::at(prime));
        }
    }
    HilbertReport report;
    for (const Place& v : places)
        if (hilbert_symbol(a, b, v) == -1) report.failures.push_back(v);
    std::sort(report.failures.begin(), report.failures.end());
    return report;
}

}  // namespace polysurj
