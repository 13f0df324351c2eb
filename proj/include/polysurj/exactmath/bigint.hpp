#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "polysurj/error.hpp"

namespace polysurj {

// Arbitrary-precision signed integer. cpp_int is sign+magnitude with a
// canonical zero, and decimal round trips are exact, which is all the
// invariants we rely on. Expression templates are off so arithmetic yields
// plain values, keeping the type usable as a generic coefficient ring.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

inline int sign_of(const BigInt& n) { return n.sign(); }

inline BigInt abs_of(const BigInt& n) { return boost::multiprecision::abs(n); }

inline BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

inline BigInt lcm_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

inline BigInt pow_of(const BigInt& base, std::uint64_t e) {
    return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

// Largest r >= 0 with r*r <= n.
inline BigInt isqrt_of(const BigInt& n) {
    if (n < 0) fail(Errc::InvalidArgument, "isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

// Floor division; b must be nonzero.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (b == 0) fail(Errc::InvalidArgument, "division by zero");
    BigInt q = a / b;  // truncates toward zero
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

// Representative in [0, m); m must be positive.
inline BigInt mod_euclid(const BigInt& a, const BigInt& m) {
    if (m <= 0) fail(Errc::InvalidArgument, "modulus must be positive");
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

inline BigInt parse_bigint(const std::string& text) {
    if (text.empty()) fail(Errc::SyntaxError, "empty integer literal");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) fail(Errc::SyntaxError, "sign with no digits");
    for (; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9') fail(Errc::SyntaxError, "bad digit in integer literal");
    return BigInt(text);
}

inline std::string to_decimal(const BigInt& n) { return n.str(); }

inline std::int64_t to_int64(const BigInt& n) {
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        fail(Errc::InvalidArgument, "integer too large for int64");
    return static_cast<std::int64_t>(n);
}

}  // namespace polysurj
