#pragma once

#include "polysurj/changevars/elementary.hpp"

namespace polysurj {

// Weak-approximation target: ask for points with x - x0 and y - y0 in
// modulus * Z (as rationals: the differences are integers divisible by the
// modulus).
struct CongruenceTarget {
    BigRational x0, y0;
    BigInt modulus = 1;

    CongruenceTarget(BigRational x, BigRational y, BigInt n)
        : x0(std::move(x)), y0(std::move(y)), modulus(std::move(n)) {
        if (modulus < 1) fail(Errc::InvalidArgument, "congruence modulus must be at least 1");
    }

    bool met_by(const BigRational& x, const BigRational& y) const {
        const BigRational dx = (x - x0) / BigRational(modulus);
        const BigRational dy = (y - y0) / BigRational(modulus);
        return is_integer(dx) && is_integer(dy);
    }
    bool met_by(const RatPoint& p) const { return met_by(p.x, p.y); }

    friend bool operator==(const CongruenceTarget&, const CongruenceTarget&) = default;
};

namespace detail {

inline BigInt shear_modulus_factor(const UniPoly& p, const BigRational& shifted_coordinate) {
    // denominator^(deg p - 1) from the paper's power-sum argument, times the
    // lcm of the shear polynomial's coefficient denominators (conservative
    // strengthening for rational coefficients)
    const BigInt b = den_of(shifted_coordinate);
    const std::int64_t n = p.degree();
    const BigInt b_power = n >= 2 ? pow_of(b, static_cast<std::uint64_t>(n - 1)) : BigInt(1);
    return b_power * p.denominator_lcm();
}

}  // namespace detail

// Pullback of a congruence target through one elementary operation: any
// point meeting the result in source coordinates maps to a point meeting
// `tgt` in image coordinates.
inline CongruenceTarget transport_target(const CongruenceTarget& tgt, const ElementaryOp& op) {
    return std::visit(
        [&tgt](const auto& o) -> CongruenceTarget {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, OpSwap>) return {tgt.y0, tgt.x0, tgt.modulus};
            if constexpr (std::is_same_v<T, OpScaleX>)
                return {tgt.x0 / o.factor, tgt.y0, den_of(o.factor) * tgt.modulus};
            if constexpr (std::is_same_v<T, OpScaleY>)
                return {tgt.x0, tgt.y0 / o.factor, den_of(o.factor) * tgt.modulus};
            if constexpr (std::is_same_v<T, OpAddXPolyToY>) {
                if (o.poly.is_zero()) return tgt;
                return {tgt.x0, tgt.y0 - o.poly.eval(tgt.x0),
                        detail::shear_modulus_factor(o.poly, tgt.x0) * tgt.modulus};
            }
            if constexpr (std::is_same_v<T, OpAddYPolyToX>) {
                if (o.poly.is_zero()) return tgt;
                return {tgt.x0 - o.poly.eval(tgt.y0), tgt.y0,
                        detail::shear_modulus_factor(o.poly, tgt.y0) * tgt.modulus};
            }
        },
        op);
}

// Pullback through a whole sequence: ops are applied to points first to
// last, so targets flow back last to first.
inline CongruenceTarget transport_target_through(CongruenceTarget tgt, const ChangeOfVars& cov) {
    for (auto it = cov.ops.rbegin(); it != cov.ops.rend(); ++it) tgt = transport_target(tgt, *it);
    return tgt;
}

}  // namespace polysurj
