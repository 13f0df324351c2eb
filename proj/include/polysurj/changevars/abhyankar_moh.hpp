#pragma once

#include <vector>

#include "polysurj/changevars/elementary.hpp"

namespace polysurj {

struct AbhyankarMohResult {
    ChangeOfVars cov;       // maps the input curve onto the final one
    ParamCurve final;       // (at + b, 0) with a != 0
    std::vector<DegreePair> degree_history;  // one entry per loop inspection
};

namespace detail {

inline UniPoly laurent_to_unipoly(const LaurentPoly<BigRational>& p) {
    if (p.is_zero()) return {};
    if (p.ord() < 0) fail(Errc::NotLaurent, "negative exponents in an affine coordinate");
    std::vector<BigRational> coeffs(static_cast<std::size_t>(p.deg()) + 1, BigRational(0));
    for (const auto& [e, c] : p.terms()) coeffs[static_cast<std::size_t>(e)] = c;
    return UniPoly::from_coeffs(std::move(coeffs));
}

}  // namespace detail

// Moves an embedded affine line onto the x-axis by iterated leading-term
// cancellation: whenever one coordinate degree divides the other, a shear
// by a suitable monomial strictly drops the larger degree. Inputs that are
// not embedded lines surface as NotEmbeddedLine when neither degree divides
// the other (or when the end state is a multiple cover of the axis).
inline AbhyankarMohResult abhyankar_moh_normalize(const ParamCurve& curve) {
    if (curve.domain != CurveDomain::Affine)
        fail(Errc::NotLaurent, "normalization expects an affine curve");

    ParamCurve c = curve;
    ChangeOfVars cov;
    std::vector<DegreePair> history;
    for (;;) {
        const UniPoly f = detail::laurent_to_unipoly(c.x);
        const UniPoly g = detail::laurent_to_unipoly(c.y);
        history.push_back({f.degree(), g.degree()});

        if (g.is_zero()) {
            if (f.degree() == 1) return {cov, c, history};
            fail(Errc::NotEmbeddedLine,
                 f.is_constant() ? "curve degenerates to a point" : "curve covers the axis multiple times");
        }
        ElementaryOp op = make_swap();
        if (g.is_constant()) {
            op = make_add_x_poly_to_y(-g);  // translate the constant away
        } else if (f.is_constant()) {
            op = make_swap();
        } else {
            const std::int64_t a = f.degree(), b = g.degree();
            if (b >= a) {
                if (b % a != 0)
                    fail(Errc::NotEmbeddedLine, "coordinate degrees " + std::to_string(a) + " and " +
                                                    std::to_string(b) + " do not divide one another");
                const std::uint64_t n = static_cast<std::uint64_t>(b / a);
                const BigRational ratio = g.leading() / rational_pow(f.leading(), n);
                op = make_add_x_poly_to_y(UniPoly::monomial(-ratio, n));
            } else {
                if (a % b != 0)
                    fail(Errc::NotEmbeddedLine, "coordinate degrees " + std::to_string(a) + " and " +
                                                    std::to_string(b) + " do not divide one another");
                const std::uint64_t n = static_cast<std::uint64_t>(a / b);
                const BigRational ratio = f.leading() / rational_pow(g.leading(), n);
                op = make_add_y_poly_to_x(UniPoly::monomial(-ratio, n));
            }
        }
        c = apply_curve(op, c);
        cov.append(std::move(op));
        if (history.size() > 4 * static_cast<std::size_t>(history.front().sum() + 8))
            fail(Errc::InvariantViolated, "normalization failed to make progress");
    }
}

}  // namespace polysurj
