#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracle_helpers.hpp"
#include "polysurj/changevars/abhyankar_moh.hpp"
#include "polysurj/changevars/congruence.hpp"
#include "polysurj/changevars/pole_reduce.hpp"

using namespace polysurj;

namespace {

UniPoly upoly(std::initializer_list<std::int64_t> coeffs) {
    return UniPoly::from_int_coeffs(std::vector<std::int64_t>(coeffs));
}

ElementaryOp random_op(std::mt19937_64& rng, std::int64_t max_degree, std::int64_t height) {
    switch (oracle::rand_range(rng, 0, 4)) {
        case 0: return make_swap();
        case 1: return make_scale_x(oracle::rand_nonzero_rational(rng, height));
        case 2: return make_scale_y(oracle::rand_nonzero_rational(rng, height));
        case 3: {
            std::vector<BigRational> coeffs;
            for (std::int64_t i = 0; i <= oracle::rand_range(rng, 0, max_degree); ++i)
                coeffs.push_back(BigRational(oracle::rand_range(rng, -height, height)));
            return make_add_x_poly_to_y(UniPoly::from_coeffs(coeffs));
        }
        default: {
            std::vector<BigRational> coeffs;
            for (std::int64_t i = 0; i <= oracle::rand_range(rng, 0, max_degree); ++i)
                coeffs.push_back(BigRational(oracle::rand_range(rng, -height, height)));
            return make_add_y_poly_to_x(UniPoly::from_coeffs(coeffs));
        }
    }
}

ChangeOfVars random_cov(std::mt19937_64& rng, std::size_t max_len, std::int64_t max_degree,
                        std::int64_t height) {
    ChangeOfVars cov;
    const std::size_t len = static_cast<std::size_t>(oracle::rand_range(rng, 0, static_cast<std::int64_t>(max_len)));
    for (std::size_t i = 0; i < len; ++i) cov.append(random_op(rng, max_degree, height));
    return cov;
}

BiPoly random_bipoly(std::mt19937_64& rng, std::int64_t dmax, std::int64_t height) {
    BiPoly out;
    for (int terms = 0; terms < 4; ++terms)
        out = out + BiPoly::monomial(BigRational(oracle::rand_range(rng, -height, height)),
                                     oracle::rand_range(rng, 0, dmax), oracle::rand_range(rng, 0, dmax));
    return out;
}

using QLP = LaurentPoly<QuadraticNumber>;

QuadraticNumber sqrt2_times(std::int64_t num, std::int64_t den) {
    return QuadraticNumber(BigRational(0), BigRational(num, den), BigInt(2));
}

}  // namespace

TEST_CASE("elementary point actions") {
    CHECK(apply_point(make_swap(), {BigRational(2), BigRational(5)}) == RatPoint{BigRational(5), BigRational(2)});
    CHECK(apply_point(make_add_x_poly_to_y(upoly({0, 0, 1})), {BigRational(3), BigRational(1)}) ==
          RatPoint{BigRational(3), BigRational(10)});
    const ElementaryOp half = make_scale_x(BigRational(1, 2));
    const RatPoint p{BigRational(7), BigRational(9)};
    CHECK(apply_point(inverse(half), apply_point(half, p)) == p);
}

TEST_CASE("round trips: point actions through random sequences") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 500; ++i) {
        ChangeOfVars cov = random_cov(rng, 5, 4, 6);
        const ChangeOfVars inv = cov.inverse();
        for (int j = 0; j < 4; ++j) {
            RatPoint p{oracle::rand_nonzero_rational(rng, 40), oracle::rand_nonzero_rational(rng, 40)};
            CHECK(apply_point(inv, apply_point(cov, p)) == p);
        }
    }
}

TEST_CASE("polynomial action is coherent with the point action") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 120; ++i) {
        ChangeOfVars cov = random_cov(rng, 4, 3, 5);
        BiPoly f = random_bipoly(rng, 3, 7);
        BiPoly transformed = apply_poly(cov, f);
        for (int j = 0; j < 3; ++j) {
            RatPoint p{oracle::rand_nonzero_rational(rng, 15), oracle::rand_nonzero_rational(rng, 15)};
            const RatPoint q = apply_point(cov, p);
            CHECK(transformed.eval(q.x, q.y) == f.eval(p.x, p.y));
        }
    }
}

TEST_CASE("curve action matches the point action pointwise") {
    std::mt19937_64 rng(23);
    ParamCurve curve = ParamCurve::affine(upoly({0, 1}), upoly({0, 2, 0, 1}));  // (t, t^3 + 2t)
    for (int i = 0; i < 60; ++i) {
        ChangeOfVars cov = random_cov(rng, 4, 3, 4);
        ParamCurve image = apply_curve(cov, curve);
        for (int j = 0; j < 3; ++j) {
            const BigRational t = oracle::rand_nonzero_rational(rng, 9);
            const RatPoint moved = apply_point(cov, {curve.x.eval(t), curve.y.eval(t)});
            CHECK(moved == RatPoint{image.x.eval(t), image.y.eval(t)});
        }
    }
}

TEST_CASE("curve action worked examples") {
    // y := y - x^3 sends (t, t^3 + 2t) to (t, 2t)
    ParamCurve c1 = apply_curve(make_add_x_poly_to_y(upoly({0, 0, 0, -1})),
                                ParamCurve::affine(upoly({0, 1}), upoly({0, 2, 0, 1})));
    CHECK(c1.x == LaurentPoly<BigRational>::variable());
    CHECK(c1.y == LaurentPoly<BigRational>::from_unipoly(upoly({0, 2})));

    ParamCurve c2 = apply_curve(make_swap(), ParamCurve::affine(upoly({0, 1}), upoly({})));
    CHECK(c2.x.is_zero());
    CHECK(c2.y == LaurentPoly<BigRational>::variable());

    // Laurent: y := y - x^2 sends (t, t^2 + 1/t) to (t, 1/t)
    using LP = LaurentPoly<BigRational>;
    ParamCurve c3 = ParamCurve::punctured(LP::variable(), LP::monomial(BigRational(1), 2) +
                                                              LP::monomial(BigRational(1), -1));
    ParamCurve c4 = apply_curve(make_add_x_poly_to_y(upoly({0, 0, -1})), c3);
    CHECK(c4.y == LP::monomial(BigRational(1), -1));
}

TEST_CASE("abhyankar-moh worked examples") {
    auto r1 = abhyankar_moh_normalize(ParamCurve::affine(upoly({0, 1}), upoly({0, 2, 0, 1})));
    CHECK(r1.cov.size() == 2);
    CHECK(r1.final.x == LaurentPoly<BigRational>::variable());
    CHECK(r1.final.y.is_zero());

    auto r2 = abhyankar_moh_normalize(ParamCurve::affine(upoly({0, 1}), upoly({})));
    CHECK(r2.cov.empty());
    CHECK(r2.final.x == LaurentPoly<BigRational>::variable());

    try {
        abhyankar_moh_normalize(ParamCurve::affine(upoly({0, 0, 1}), upoly({0, 0, 0, 1})));
        FAIL("expected NotEmbeddedLine for the cuspidal parameterization");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotEmbeddedLine);
    }
}

TEST_CASE("abhyankar-moh on scrambled axes: re-verification and progress") {
    std::mt19937_64 rng(24);
    for (int performed = 0; performed < 100; ++performed) {
        ChangeOfVars cov = random_cov(rng, 4, 3, 3);
        ParamCurve axis = ParamCurve::affine(upoly({0, 1}), upoly({}));
        ParamCurve scrambled = apply_curve(cov, axis);
        auto result = abhyankar_moh_normalize(scrambled);

        // final curve is an axis up to affine reparameterization
        CHECK(result.final.y.is_zero());
        CHECK(result.final.x.deg() == 1);

        // the composed map re-verifies pointwise
        for (int j = 0; j < 20; ++j) {
            const BigRational t(oracle::rand_range(rng, -10, 10));
            const RatPoint start{scrambled.x.eval(t), scrambled.y.eval(t)};
            const RatPoint end{result.final.x.eval(t), result.final.y.eval(t)};
            CHECK(apply_point(result.cov, start) == end);
        }

        // the degree sum strictly decreases whenever a shear fires
        const auto& hist = result.degree_history;
        REQUIRE(!hist.empty());
        for (std::size_t i = 0; i + 1 < hist.size(); ++i) {
            const bool translation_or_swap = hist[i].a <= 0 || hist[i].b <= 0;
            if (!translation_or_swap) CHECK(hist[i + 1].sum() < hist[i].sum());
        }
    }
}

TEST_CASE("pole reduction worked examples") {
    using LP = LaurentPoly<BigRational>;
    // (t, t^2 + 1/t): one cancellation separates the punctures
    auto r1 = pole_reduce_at_infinity(ParamCurve::punctured(
        LP::variable(), LP::monomial(BigRational(1), 2) + LP::monomial(BigRational(1), -1)));
    CHECK(r1.kind == PoleReduceOutcome::Kind::SeparatedPoints);
    REQUIRE(r1.cov.size() == 1);
    CHECK(r1.final.y == QLP::monomial(QuadraticNumber(BigRational(1)), -1));

    // (t, 1/t): already separated
    auto r2 = pole_reduce_at_infinity(
        ParamCurve::punctured(LP::variable(), LP::monomial(BigRational(1), -1)));
    CHECK(r2.kind == PoleReduceOutcome::Kind::SeparatedPoints);
    CHECK(r2.cov.empty());

    // degenerate double cover: constant x, y with poles at both punctures
    auto r3 = pole_reduce_at_infinity(ParamCurve::punctured(
        LP::constant(BigRational(3)), LP::variable() + LP::monomial(BigRational(1), -1)));
    CHECK(r3.kind == PoleReduceOutcome::Kind::DegenerateDoubleCover);

    // curve through (1:0:0) only: x dominates at both punctures
    auto r4 = pole_reduce_at_infinity(ParamCurve::punctured(
        LP::variable() + LP::monomial(BigRational(1), -1), LP::constant(BigRational(5))));
    CHECK(r4.kind == PoleReduceOutcome::Kind::LeftInfinityPoint);

    // pole orders 2 and 3 at both punctures violate the divisibility law
    try {
        pole_reduce_at_infinity(ParamCurve::punctured(
            LP::monomial(BigRational(1), 2) + LP::monomial(BigRational(1), -2),
            LP::monomial(BigRational(1), 3) + LP::monomial(BigRational(1), -3)));
        FAIL("expected NonIntegralExponent");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonIntegralExponent);
    }
}

TEST_CASE("pole reduction finds conjugate irrational asymptotics") {
    // Pell conic y^2 - 2x^2 = 1 parameterized over Q(sqrt(2)) by
    // x = (u - 1/u) / (2 sqrt(2)), y = (u + 1/u) / 2; slopes at the
    // punctures are the conjugates +/- sqrt(2)
    const QLP x = QLP::monomial(sqrt2_times(1, 4), 1) + QLP::monomial(sqrt2_times(-1, 4), -1);
    const QLP y = QLP::monomial(QuadraticNumber(BigRational(1, 2)), 1) +
                  QLP::monomial(QuadraticNumber(BigRational(1, 2)), -1);
    const QuadParamCurve pell = QuadParamCurve::punctured(x, y);

    // sanity: the parameterization really lies on the conic
    const QuadraticNumber u(BigRational(3), BigRational(1), BigInt(2));
    const QuadraticNumber one(BigRational(1));
    CHECK(y.eval(u) * y.eval(u) - QuadraticNumber(BigRational(2)) * x.eval(u) * x.eval(u) == one);

    auto direct = pole_reduce_at_infinity(pell);
    CHECK(direct.kind == PoleReduceOutcome::Kind::IrrationalAsymptotic);
    CHECK(direct.cov.empty());
    CHECK(direct.pole_exponent == 1);
    CHECK(direct.asymptotic_ratio == QuadraticNumber(BigRational(0), BigRational(1), BigInt(2)));

    // scramble with y := y + x^2 and check the reducer recovers the step
    QuadParamCurve scrambled = apply_curve(make_add_x_poly_to_y(upoly({0, 0, 1})), pell);
    auto reduced = pole_reduce_at_infinity(scrambled);
    CHECK(reduced.kind == PoleReduceOutcome::Kind::IrrationalAsymptotic);
    REQUIRE(reduced.cov.size() == 1);
    CHECK(reduced.cov.ops[0] == make_add_x_poly_to_y(upoly({0, 0, -1})));
    CHECK(reduced.asymptotic_ratio == QuadraticNumber(BigRational(0), BigRational(1), BigInt(2)));
    CHECK(reduced.pole_exponent == 1);
    CHECK(reduced.final.x == pell.x);
    CHECK(reduced.final.y == pell.y);
}

TEST_CASE("pole reduction strips stacked shears") {
    using LP = LaurentPoly<BigRational>;
    // scramble a separated curve by two shears; the loop must terminate
    // separated again with the y-pole fully reduced
    ParamCurve base = ParamCurve::punctured(LP::variable(), LP::monomial(BigRational(1), -1));
    ChangeOfVars cov;
    cov.append(make_add_x_poly_to_y(upoly({0, 0, 3})));
    cov.append(make_add_x_poly_to_y(upoly({0, -2, 0, 0, 1})));
    auto result = pole_reduce_at_infinity(apply_curve(cov, base));
    CHECK(result.kind == PoleReduceOutcome::Kind::SeparatedPoints);
    CHECK(result.final.y.deg() <= 1);
}

TEST_CASE("congruence transport worked examples") {
    const CongruenceTarget t1{BigRational(4), BigRational(1), BigInt(5)};
    CHECK(transport_target(t1, make_swap()) == CongruenceTarget{BigRational(1), BigRational(4), BigInt(5)});

    const CongruenceTarget t2 = transport_target(t1, make_scale_x(BigRational(2, 3)));
    CHECK(t2 == CongruenceTarget{BigRational(6), BigRational(1), BigInt(15)});

    const CongruenceTarget t3{BigRational(1, 2), BigRational(0), BigInt(3)};
    const CongruenceTarget t4 = transport_target(t3, make_add_x_poly_to_y(upoly({0, 0, 1})));
    CHECK(t4 == CongruenceTarget{BigRational(1, 2), BigRational(-1, 4), BigInt(6)});
}

TEST_CASE("congruence transport soundness by enumeration") {
    std::mt19937_64 rng(25);
    for (int i = 0; i < 500; ++i) {
        const ElementaryOp op = random_op(rng, 3, 4);
        const CongruenceTarget tgt{oracle::rand_nonzero_rational(rng, 8), oracle::rand_nonzero_rational(rng, 8),
                                   BigInt(oracle::rand_range(rng, 1, 12))};
        const CongruenceTarget source = transport_target(tgt, op);
        for (std::int64_t dx = -2; dx <= 2; ++dx) {
            for (std::int64_t dy = -2; dy <= 2; ++dy) {
                const RatPoint p{source.x0 + BigRational(dx) * BigRational(source.modulus),
                                 source.y0 + BigRational(dy) * BigRational(source.modulus)};
                REQUIRE(source.met_by(p));
                CHECK(tgt.met_by(apply_point(op, p)));
            }
        }
    }
}

TEST_CASE("transport through a sequence composes soundly") {
    std::mt19937_64 rng(26);
    for (int i = 0; i < 100; ++i) {
        const ChangeOfVars cov = random_cov(rng, 4, 2, 3);
        const CongruenceTarget tgt{BigRational(oracle::rand_range(rng, -5, 5)),
                                   BigRational(oracle::rand_range(rng, -5, 5)),
                                   BigInt(oracle::rand_range(rng, 1, 9))};
        const CongruenceTarget source = transport_target_through(tgt, cov);
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                const RatPoint p{source.x0 + BigRational(dx) * BigRational(source.modulus),
                                 source.y0 + BigRational(dy) * BigRational(source.modulus)};
                CHECK(tgt.met_by(apply_point(cov, p)));
            }
        }
    }
}

TEST_CASE("degree pair partial order") {
    CHECK(preceq({1, 3}, {3, 2}));
    CHECK_FALSE(preceq({1, 4}, {3, 2}));
    CHECK(preceq({2, 2}, {2, 2}));
}
