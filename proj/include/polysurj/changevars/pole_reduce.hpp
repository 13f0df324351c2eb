#pragma once

#include <cstdint>

#include "polysurj/changevars/elementary.hpp"

namespace polysurj {

// Outcome of the pole-order reduction loop at the punctures of a Laurent
// curve (the punctures are t = 0 and t = infinity).
struct PoleReduceOutcome {
    enum class Kind {
        SeparatedPoints,       // the punctures now map to distinct points of P^2
        LeftInfinityPoint,     // common image moved to (1:0:0); caller may swap and re-run
        IrrationalAsymptotic,  // y ~ A x^d with A in a real quadratic field
        DegenerateDoubleCover, // x constant while y has poles at both punctures
    };

    Kind kind;
    ChangeOfVars cov;
    QuadParamCurve final;
    QuadraticNumber asymptotic_ratio;  // IrrationalAsymptotic only
    std::int64_t pole_exponent = 0;    // the d of y ~ A x^d
};

namespace detail {

struct PunctureData {
    std::int64_t pole_x = 0, pole_y = 0;
    QuadraticNumber lead_x, lead_y;  // coefficients of the dominant exponents
};

template <class Coeff>
PunctureData puncture_data(const BasicParamCurve<Coeff>& c, bool at_infinity) {
    PunctureData d;
    if (!c.x.is_zero()) {
        const std::int64_t e = at_infinity ? c.x.deg() : -c.x.ord();
        if (e > 0) {
            d.pole_x = e;
            d.lead_x = QuadraticNumber(c.x.coeff(at_infinity ? e : -e));
        }
    }
    if (!c.y.is_zero()) {
        const std::int64_t e = at_infinity ? c.y.deg() : -c.y.ord();
        if (e > 0) {
            d.pole_y = e;
            d.lead_y = QuadraticNumber(c.y.coeff(at_infinity ? e : -e));
        }
    }
    return d;
}

// image of a puncture in P^2
struct ProjImage {
    enum class Kind { AffinePoint, XDirection, YDirection, Slope } kind;
    QuadraticNumber x, y;   // AffinePoint
    QuadraticNumber slope;  // Slope: the point (1 : slope : 0)

    friend bool operator==(const ProjImage&, const ProjImage&) = default;
};

template <class Coeff>
ProjImage puncture_image(const BasicParamCurve<Coeff>& c, bool at_infinity) {
    const PunctureData d = puncture_data(c, at_infinity);
    if (d.pole_x == 0 && d.pole_y == 0) {
        // finite limit point: the exponent-zero coefficients
        return {ProjImage::Kind::AffinePoint, QuadraticNumber(c.x.coeff(0)), QuadraticNumber(c.y.coeff(0)),
                QuadraticNumber()};
    }
    if (d.pole_x > d.pole_y) return {ProjImage::Kind::XDirection, {}, {}, {}};
    if (d.pole_y > d.pole_x) return {ProjImage::Kind::YDirection, {}, {}, {}};
    return {ProjImage::Kind::Slope, {}, {}, d.lead_y / d.lead_x};
}

}  // namespace detail

// Repeatedly cancels the dominant growth of y against a power of x while
// the asymptotic ratio stays rational, following the trichotomy: separated
// punctures, a curve that left (0:1:0), or an irrational asymptotic ratio
// (conjugate punctures). The pole order of y at the processed puncture
// strictly decreases each step.
inline PoleReduceOutcome pole_reduce_at_infinity(const QuadParamCurve& curve) {
    if (curve.domain != CurveDomain::Punctured)
        fail(Errc::NotLaurent, "pole reduction expects a punctured-domain curve");

    using detail::ProjImage;
    QuadParamCurve c = curve;
    ChangeOfVars cov;

    auto pole_budget = [](const QuadParamCurve& k) {
        std::int64_t total = 16;
        for (bool at_inf : {false, true}) {
            const auto d = detail::puncture_data(k, at_inf);
            total += d.pole_x + d.pole_y;
        }
        return 4 * total;
    };
    std::int64_t guard = pole_budget(c);

    for (;;) {
        if (guard-- <= 0) fail(Errc::BudgetExhausted, "pole reduction exceeded its iteration budget");
        const auto data0 = detail::puncture_data(c, false);
        const auto data1 = detail::puncture_data(c, true);

        if (c.x.is_constant() && data0.pole_y > 0 && data1.pole_y > 0)
            return {PoleReduceOutcome::Kind::DegenerateDoubleCover, cov, c, {}, 0};

        const ProjImage p0 = detail::puncture_image(c, false);
        const ProjImage p1 = detail::puncture_image(c, true);

        if (!(p0 == p1)) {
            if (p0.kind == ProjImage::Kind::Slope && p1.kind == ProjImage::Kind::Slope &&
                p0.slope == p1.slope.conj() && !p1.slope.is_rational()) {
                // conjugate quadratic points at infinity: report the slope at
                // the preferred puncture (larger y-pole, tie to infinity)
                const bool prefer_infinity = data1.pole_y >= data0.pole_y;
                return {PoleReduceOutcome::Kind::IrrationalAsymptotic, cov, c,
                        prefer_infinity ? p1.slope : p0.slope, 1};
            }
            return {PoleReduceOutcome::Kind::SeparatedPoints, cov, c, {}, 0};
        }

        if (p0.kind == ProjImage::Kind::AffinePoint)
            fail(Errc::InvariantViolated, "punctures share a finite limit point");
        if (p0.kind == ProjImage::Kind::XDirection)
            return {PoleReduceOutcome::Kind::LeftInfinityPoint, cov, c, {}, 0};

        // common image (0:1:0) or (1:A:0): process the puncture where x has a
        // pole, preferring the larger y-pole (ties go to infinity)
        bool at_infinity;
        if (data1.pole_x >= 1 && data0.pole_x >= 1)
            at_infinity = data1.pole_y >= data0.pole_y;
        else if (data1.pole_x >= 1)
            at_infinity = true;
        else if (data0.pole_x >= 1)
            at_infinity = false;
        else
            return {PoleReduceOutcome::Kind::DegenerateDoubleCover, cov, c, {}, 0};

        const auto& d = at_infinity ? data1 : data0;
        if (d.pole_y % d.pole_x != 0)
            fail(Errc::NonIntegralExponent, "pole order " + std::to_string(d.pole_x) +
                                                " of x does not divide pole order " +
                                                std::to_string(d.pole_y) + " of y");
        const std::int64_t exponent = d.pole_y / d.pole_x;
        const QuadraticNumber ratio = d.lead_y / (d.pole_x == d.pole_y ? d.lead_x
                                                                        : power(d.lead_x, exponent));
        if (!ratio.is_rational())
            return {PoleReduceOutcome::Kind::IrrationalAsymptotic, cov, c, ratio, exponent};

        const ElementaryOp op = make_add_x_poly_to_y(
            UniPoly::monomial(-ratio.rational_part(), static_cast<std::uint64_t>(exponent)));
        QuadParamCurve next = apply_curve(op, c);
        const auto after = detail::puncture_data(next, at_infinity);
        if (after.pole_y >= d.pole_y)
            fail(Errc::InvariantViolated, "pole order failed to decrease");
        c = std::move(next);
        cov.append(op);
    }
}

inline PoleReduceOutcome pole_reduce_at_infinity(const ParamCurve& curve) {
    return pole_reduce_at_infinity(lift_to_quadratic(curve));
}

}  // namespace polysurj
