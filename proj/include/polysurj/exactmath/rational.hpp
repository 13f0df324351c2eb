#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "polysurj/exactmath/bigint.hpp"

namespace polysurj {

// Exact rational, always reduced, denominator positive (cpp_rational keeps
// both invariants canonically).
using BigRational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                                   boost::multiprecision::et_off>;

inline BigInt num_of(const BigRational& q) { return numerator(q); }
inline BigInt den_of(const BigRational& q) { return denominator(q); }

inline int sign_of(const BigRational& q) { return q.sign(); }

inline BigRational abs_of(const BigRational& q) { return boost::multiprecision::abs(q); }

inline bool is_integer(const BigRational& q) { return denominator(q) == 1; }

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) fail(Errc::InvalidArgument, "rational with zero denominator");
    if (den < 0) return BigRational(-num, -den);
    return BigRational(num, den);
}

inline BigRational rational_pow(const BigRational& q, std::uint64_t e) {
    return BigRational(pow_of(numerator(q), e), pow_of(denominator(q), e));
}

// Reciprocal; q must be nonzero.
inline BigRational inverse_of(const BigRational& q) {
    if (q == 0) fail(Errc::InvalidArgument, "inverse of zero");
    return make_rational(denominator(q), numerator(q));
}

inline BigInt rational_floor(const BigRational& q) { return floor_div(numerator(q), denominator(q)); }

inline BigInt rational_ceil(const BigRational& q) { return ceil_div(numerator(q), denominator(q)); }

// "p" for integers, "p/q" otherwise.
inline std::string to_decimal(const BigRational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace polysurj
