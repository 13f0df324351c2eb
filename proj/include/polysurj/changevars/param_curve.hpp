#pragma once

#include <algorithm>
#include <cstdint>

#include "polysurj/exactmath/quadratic.hpp"
#include "polysurj/polyalg/laurent.hpp"

namespace polysurj {

enum class CurveDomain {
    Affine,     // parameterized by the affine line: polynomial coordinates
    Punctured,  // parameterized by the punctured line: Laurent coordinates
};

// Parameterized plane curve phi(t) = (x(t), y(t)).
template <class Coeff = BigRational>
struct BasicParamCurve {
    LaurentPoly<Coeff> x, y;
    CurveDomain domain = CurveDomain::Affine;

    BasicParamCurve(LaurentPoly<Coeff> x_coord, LaurentPoly<Coeff> y_coord, CurveDomain dom)
        : x(std::move(x_coord)), y(std::move(y_coord)), domain(dom) {
        if (x.is_constant() && y.is_constant())
            fail(Errc::InvalidArgument, "both coordinate functions are constant");
        if (domain == CurveDomain::Affine && !(x.polynomial_part_only() && y.polynomial_part_only()))
            fail(Errc::NotLaurent, "affine curve with negative exponents");
    }

    static BasicParamCurve affine(const UniPoly& f, const UniPoly& g) {
        return BasicParamCurve(LaurentPoly<Coeff>::from_unipoly(f), LaurentPoly<Coeff>::from_unipoly(g),
                               CurveDomain::Affine);
    }

    static BasicParamCurve punctured(LaurentPoly<Coeff> f, LaurentPoly<Coeff> g) {
        return BasicParamCurve(std::move(f), std::move(g), CurveDomain::Punctured);
    }
};

using ParamCurve = BasicParamCurve<BigRational>;
using QuadParamCurve = BasicParamCurve<QuadraticNumber>;

inline QuadParamCurve lift_to_quadratic(const ParamCurve& c) {
    auto lift = [](const LaurentPoly<BigRational>& p) {
        LaurentPoly<QuadraticNumber> out;
        for (const auto& [e, v] : p.terms()) out = out + LaurentPoly<QuadraticNumber>::monomial(QuadraticNumber(v), e);
        return out;
    };
    return QuadParamCurve(lift(c.x), lift(c.y), c.domain);
}

// Coordinate degree pair with the min/max componentwise partial order used
// in the pole-order bookkeeping. The -1 entry is the zero polynomial's
// degree sentinel.
struct DegreePair {
    std::int64_t a = -1;
    std::int64_t b = -1;

    std::int64_t sum() const { return a + b; }
    friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

inline bool preceq(const DegreePair& p, const DegreePair& q) {
    return std::min(p.a, p.b) <= std::min(q.a, q.b) && std::max(p.a, p.b) <= std::max(q.a, q.b);
}

}  // namespace polysurj
