#pragma once

#include <string>
#include <variant>
#include <vector>

#include "polysurj/changevars/param_curve.hpp"
#include "polysurj/polyalg/bipoly.hpp"
#include "polysurj/polyalg/unipoly.hpp"

namespace polysurj {

// The elementary planar coordinate changes: scalings, the swap, and shears
// by a polynomial in the other variable. Every one is invertible.
struct OpSwap {
    friend bool operator==(const OpSwap&, const OpSwap&) = default;
};
struct OpScaleX {
    BigRational factor;
    friend bool operator==(const OpScaleX&, const OpScaleX&) = default;
};
struct OpScaleY {
    BigRational factor;
    friend bool operator==(const OpScaleY&, const OpScaleY&) = default;
};
struct OpAddXPolyToY {  // (x, y) -> (x, y + p(x))
    UniPoly poly;
    friend bool operator==(const OpAddXPolyToY&, const OpAddXPolyToY&) = default;
};
struct OpAddYPolyToX {  // (x, y) -> (x + p(y), y)
    UniPoly poly;
    friend bool operator==(const OpAddYPolyToX&, const OpAddYPolyToX&) = default;
};

using ElementaryOp = std::variant<OpSwap, OpScaleX, OpScaleY, OpAddXPolyToY, OpAddYPolyToX>;

inline ElementaryOp make_swap() { return OpSwap{}; }
inline ElementaryOp make_scale_x(const BigRational& q) {
    if (q == 0) fail(Errc::InvalidArgument, "scale factor must be nonzero");
    return OpScaleX{q};
}
inline ElementaryOp make_scale_y(const BigRational& q) {
    if (q == 0) fail(Errc::InvalidArgument, "scale factor must be nonzero");
    return OpScaleY{q};
}
inline ElementaryOp make_add_x_poly_to_y(UniPoly p) { return OpAddXPolyToY{std::move(p)}; }
inline ElementaryOp make_add_y_poly_to_x(UniPoly p) { return OpAddYPolyToX{std::move(p)}; }

inline ElementaryOp inverse(const ElementaryOp& op) {
    return std::visit(
        [](const auto& o) -> ElementaryOp {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, OpSwap>) return o;
            if constexpr (std::is_same_v<T, OpScaleX>) return OpScaleX{inverse_of(o.factor)};
            if constexpr (std::is_same_v<T, OpScaleY>) return OpScaleY{inverse_of(o.factor)};
            if constexpr (std::is_same_v<T, OpAddXPolyToY>) return OpAddXPolyToY{-o.poly};
            if constexpr (std::is_same_v<T, OpAddYPolyToX>) return OpAddYPolyToX{-o.poly};
        },
        op);
}

struct RatPoint {
    BigRational x, y;
    friend bool operator==(const RatPoint&, const RatPoint&) = default;
};

inline RatPoint apply_point(const ElementaryOp& op, const RatPoint& pt) {
    return std::visit(
        [&pt](const auto& o) -> RatPoint {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, OpSwap>) return {pt.y, pt.x};
            if constexpr (std::is_same_v<T, OpScaleX>) return {o.factor * pt.x, pt.y};
            if constexpr (std::is_same_v<T, OpScaleY>) return {pt.x, o.factor * pt.y};
            if constexpr (std::is_same_v<T, OpAddXPolyToY>) return {pt.x, pt.y + o.poly.eval(pt.x)};
            if constexpr (std::is_same_v<T, OpAddYPolyToX>) return {pt.x + o.poly.eval(pt.y), pt.y};
        },
        op);
}

// Polynomial action, fixed so that (apply_poly(op, F))(apply_point(op, P))
// equals F(P): the transformed polynomial is F composed with the inverse
// point map.
inline BiPoly apply_poly(const ElementaryOp& op, const BiPoly& f) {
    const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    return std::visit(
        [&](const auto& o) -> BiPoly {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, OpSwap>) return f.swap_vars();
            if constexpr (std::is_same_v<T, OpScaleX>) {
                BiPoly out;
                const BigRational inv = inverse_of(o.factor);
                for (const auto& [k, c] : f.terms())
                    out = out + BiPoly::monomial(c * rational_pow(inv, static_cast<std::uint64_t>(k.first)),
                                                 k.first, k.second);
                return out;
            }
            if constexpr (std::is_same_v<T, OpScaleY>) {
                BiPoly out;
                const BigRational inv = inverse_of(o.factor);
                for (const auto& [k, c] : f.terms())
                    out = out + BiPoly::monomial(c * rational_pow(inv, static_cast<std::uint64_t>(k.second)),
                                                 k.first, k.second);
                return out;
            }
            if constexpr (std::is_same_v<T, OpAddXPolyToY>)
                return f.substitute(x, y - BiPoly::from_unipoly_x(o.poly));
            if constexpr (std::is_same_v<T, OpAddYPolyToX>)
                return f.substitute(x - BiPoly::from_unipoly_y(o.poly), y);
        },
        op);
}

// Pointwise curve action: apply_point(op, phi(t)) parameterizes the image.
template <class Coeff>
BasicParamCurve<Coeff> apply_curve(const ElementaryOp& op, const BasicParamCurve<Coeff>& c) {
    return std::visit(
        [&c](const auto& o) -> BasicParamCurve<Coeff> {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, OpSwap>) return {c.y, c.x, c.domain};
            if constexpr (std::is_same_v<T, OpScaleX>) return {Coeff(o.factor) * c.x, c.y, c.domain};
            if constexpr (std::is_same_v<T, OpScaleY>) return {c.x, Coeff(o.factor) * c.y, c.domain};
            if constexpr (std::is_same_v<T, OpAddXPolyToY>)
                return {c.x, c.y + substitute_into(o.poly, c.x), c.domain};
            if constexpr (std::is_same_v<T, OpAddYPolyToX>)
                return {c.x + substitute_into(o.poly, c.y), c.y, c.domain};
        },
        op);
}

inline std::string op_str(const ElementaryOp& op) {
    return std::visit(
        [](const auto& o) -> std::string {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, OpSwap>) return "swap";
            if constexpr (std::is_same_v<T, OpScaleX>) return "scaleX(" + to_decimal(o.factor) + ")";
            if constexpr (std::is_same_v<T, OpScaleY>) return "scaleY(" + to_decimal(o.factor) + ")";
            if constexpr (std::is_same_v<T, OpAddXPolyToY>) return "addXtoY(" + o.poly.str("x") + ")";
            if constexpr (std::is_same_v<T, OpAddYPolyToX>) return "addYtoX(" + o.poly.str("y") + ")";
        },
        op);
}

// An ordered sequence of elementary operations, applied left to right.
struct ChangeOfVars {
    std::vector<ElementaryOp> ops;

    static ChangeOfVars identity() { return {}; }

    std::size_t size() const { return ops.size(); }
    bool empty() const { return ops.empty(); }
    void append(ElementaryOp op) { ops.push_back(std::move(op)); }

    ChangeOfVars then(const ChangeOfVars& next) const {
        ChangeOfVars out = *this;
        out.ops.insert(out.ops.end(), next.ops.begin(), next.ops.end());
        return out;
    }

    ChangeOfVars inverse() const {
        ChangeOfVars out;
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) out.ops.push_back(polysurj::inverse(*it));
        return out;
    }

    friend bool operator==(const ChangeOfVars&, const ChangeOfVars&) = default;
};

inline RatPoint apply_point(const ChangeOfVars& cov, RatPoint pt) {
    for (const ElementaryOp& op : cov.ops) pt = apply_point(op, pt);
    return pt;
}

inline BiPoly apply_poly(const ChangeOfVars& cov, BiPoly f) {
    for (const ElementaryOp& op : cov.ops) f = apply_poly(op, f);
    return f;
}

template <class Coeff>
BasicParamCurve<Coeff> apply_curve(const ChangeOfVars& cov, BasicParamCurve<Coeff> c) {
    for (const ElementaryOp& op : cov.ops) c = apply_curve(op, c);
    return c;
}

}  // namespace polysurj
