#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracle_helpers.hpp"
#include "polysurj/analyzers/conic.hpp"
#include "polysurj/analyzers/cover_genus.hpp"
#include "polysurj/analyzers/normal_form.hpp"
#include "polysurj/analyzers/parity.hpp"
#include "polysurj/analyzers/scan.hpp"
#include "polysurj/analyzers/witness.hpp"

using namespace polysurj;

namespace {

UniPoly upoly(std::initializer_list<std::int64_t> coeffs) {
    return UniPoly::from_int_coeffs(std::vector<std::int64_t>(coeffs));
}

// Ramification-sum oracle: the raw Riemann-Hurwitz count
// 2g - 2 = n(-2) + sum over points above each branch point of (e_P - 1),
// with gcd(n, ord) points upstairs of index n/gcd each. The zero/pole
// multiplicities come from a plain gcd-peeling done right here, independent
// of the library's squarefree machinery.
BigInt genus_oracle(const RationalFunction& f, const BigInt& n) {
    std::vector<std::pair<std::int64_t, std::int64_t>> orders;  // (order, point count)
    auto collect = [&orders](const UniPoly& poly, int sgn) {
        UniPoly rest = poly.monic();
        for (std::int64_t mult = 1; rest.degree() > 0; ++mult) {
            UniPoly layer = uni_gcd(rest, rest.derivative());
            UniPoly distinct = rest / layer;  // one copy of every root of multiplicity >= mult
            UniPoly exactly = distinct;
            if (layer.degree() > 0) exactly = distinct / uni_gcd(distinct, layer);
            if (exactly.degree() > 0) orders.emplace_back(sgn * mult, exactly.degree());
            rest = layer;
        }
    };
    collect(f.num(), +1);
    collect(f.den(), -1);
    const std::int64_t at_infinity = f.den().degree() - f.num().degree();
    if (at_infinity != 0) orders.emplace_back(at_infinity, 1);

    BigInt ramification(0);
    for (const auto& [order, count] : orders) {
        const BigInt g = gcd_of(n, BigInt(order < 0 ? -order : order));
        ramification += BigInt(count) * g * (n / g - 1);
    }
    const BigInt two_g_minus_2 = n * (-2) + ramification;
    return (two_g_minus_2 + 2) / 2;
}

RationalFunction random_rational_function(std::mt19937_64& rng, std::int64_t max_degree) {
    for (;;) {
        std::vector<std::int64_t> nc, dc;
        for (std::int64_t i = 0; i <= oracle::rand_range(rng, 0, max_degree); ++i)
            nc.push_back(oracle::rand_range(rng, -6, 6));
        for (std::int64_t i = 0; i <= oracle::rand_range(rng, 0, max_degree); ++i)
            dc.push_back(oracle::rand_range(rng, -6, 6));
        UniPoly num = UniPoly::from_int_coeffs(nc), den = UniPoly::from_int_coeffs(dc);
        if (num.is_zero() || den.is_zero()) continue;
        RationalFunction f(num, den);
        if (!f.is_constant()) return f;
    }
}

const CongruenceTarget kTrivialTarget{BigRational(0), BigRational(0), BigInt(1)};

}  // namespace

TEST_CASE("cover exponent worked examples") {
    UniPoly t = UniPoly::variable();
    UniPoly one = UniPoly::constant(BigRational(1));
    CHECK(choose_cover_exponent(RationalFunction(t * (t - one))) == 3);
    CHECK(choose_cover_exponent(RationalFunction(t.pow(3), t - one)) == 5);
    CHECK(choose_cover_exponent(RationalFunction(t)) == 3);
    CHECK_THROWS_AS(choose_cover_exponent(RationalFunction(one)), Error);
}

TEST_CASE("cyclic cover genus worked examples") {
    UniPoly t = UniPoly::variable();
    UniPoly one = UniPoly::constant(BigRational(1));
    CHECK(cyclic_cover_genus(CoverSpec(RationalFunction(t), BigInt(5))) == 0);
    CHECK(cyclic_cover_genus(CoverSpec(RationalFunction(t * (t - one)), BigInt(5))) == 2);
    CHECK(cyclic_cover_genus(CoverSpec(RationalFunction(t.pow(2), t.pow(2) - one), BigInt(3))) == 1);

    // exponent dividing an order violates the cover invariant
    CHECK_THROWS_AS(CoverSpec(RationalFunction(t.pow(3), t - one), BigInt(3)), Error);
    CHECK_THROWS_AS(CoverSpec(RationalFunction(t), BigInt(4)), Error);
}

TEST_CASE("cyclic cover genus matches the ramification-sum oracle") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        RationalFunction f = random_rational_function(rng, 8);
        const BigInt n = choose_cover_exponent(f);
        const BigInt g = cyclic_cover_genus(CoverSpec(f, n));
        CHECK(g == genus_oracle(f, n));
        // with k >= 3 branch points the cover satisfies 2g - 2 >= n - 3
        if (branch_point_count(f) >= 3) CHECK(2 * g - 2 >= n - 3);
        CHECK(g >= 0);
    }
}

TEST_CASE("parity obstruction verdicts") {
    CHECK(parity_obstruction(3, BigRational(1)).kind == ParityVerdict::Kind::OddNegativeValues);
    CHECK(parity_obstruction(3, BigRational(1)).negative_half_line == -1);
    CHECK(parity_obstruction(2, BigRational(1)).kind == ParityVerdict::Kind::EvenSquaresOnly);
    auto flipped = parity_obstruction(5, BigRational(-2));
    CHECK(flipped.kind == ParityVerdict::Kind::OddNegativeValues);
    CHECK(flipped.negative_half_line == +1);
    CHECK(parity_obstruction(4, BigRational(-1)).kind == ParityVerdict::Kind::NegativeEvenCase);
    CHECK_THROWS_AS(parity_obstruction(0, BigRational(1)), Error);
    CHECK_THROWS_AS(parity_obstruction(2, BigRational(0)), Error);
}

TEST_CASE("classifier worked examples") {
    const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();

    CHECK(std::holds_alternative<AxisLinear>(classify_normal_form(x)));
    CHECK(form_cov(classify_normal_form(x))->empty());

    NormalForm torus = classify_normal_form(x.pow(2) * y.pow(3) + BiPoly::constant(BigRational(1)));
    REQUIRE(std::holds_alternative<TorusMonomial>(torus));
    const auto& tm = std::get<TorusMonomial>(torus);
    CHECK(tm.a == 2);
    CHECK(tm.b == 3);
    CHECK(tm.scale == 1);
    CHECK(tm.shift == 1);

    NormalForm lin = classify_normal_form((x.pow(2) - x) * y + BiPoly::constant(BigRational(7)));
    REQUIRE(std::holds_alternative<LinearInSecond>(lin));
    const auto& ls = std::get<LinearInSecond>(lin);
    CHECK(ls.f1 == upoly({0, -1, 1}));
    CHECK(ls.f2 == upoly({7}));

    BiPoly twisted_poly = x.pow(2) * (x * y + BiPoly::constant(BigRational(1))).pow(3) +
                          BiPoly::constant(BigRational(1));
    NormalForm tw = classify_normal_form(twisted_poly);
    REQUIRE(std::holds_alternative<TwistedMonomial>(tw));
    const auto& twm = std::get<TwistedMonomial>(tw);
    CHECK(twm.a == 2);
    CHECK(twm.ell == 1);
    CHECK(twm.b == 3);
    CHECK(twm.p == upoly({1}));

    NormalForm cusp = classify_normal_form(y.pow(2) - x.pow(3));
    REQUIRE(std::holds_alternative<CuspidalExcluded>(cusp));
    CHECK(std::get<CuspidalExcluded>(cusp).n == 2);
    CHECK(std::get<CuspidalExcluded>(cusp).m == 3);

    CHECK(is_unclassified(classify_normal_form(x.pow(2) + y.pow(2))));
    CHECK(is_unclassified(classify_normal_form(-(x.pow(2)) - y.pow(2) - BiPoly::constant(BigRational(1)))));
}

TEST_CASE("classifier degree-1 detection precedes monomial forms") {
    const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    NormalForm form = classify_normal_form(x * y - BiPoly::constant(BigRational(1)));
    REQUIRE(std::holds_alternative<LinearInSecond>(form));
    CHECK(std::get<LinearInSecond>(form).f1 == upoly({0, 1}));
    CHECK(std::get<LinearInSecond>(form).f2 == upoly({-1}));
}

TEST_CASE("classifier finds forms hidden by small changes of variables") {
    const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    BiPoly torus = x.pow(2) * y.pow(3) + BiPoly::constant(BigRational(1));

    ChangeOfVars shear;
    shear.append(make_add_x_poly_to_y(upoly({0, 1})));
    BiPoly hidden = apply_poly(shear.inverse(), torus);  // x^2 (y + x)^3 + 1
    NormalForm found = classify_normal_form(hidden);
    REQUIRE(std::holds_alternative<TorusMonomial>(found));
    CHECK(validate_form(hidden, found));

    NormalForm hinted = classify_normal_form(hidden, {shear});
    CHECK(std::holds_alternative<TorusMonomial>(hinted));
    CHECK(validate_form(hidden, hinted));

    // x y^2 + 1 itself is linear in x, so the try-order classifies it as
    // the fibration shape rather than a torus monomial
    NormalForm linear_first = classify_normal_form(x * y.pow(2) + BiPoly::constant(BigRational(1)));
    REQUIRE(std::holds_alternative<LinearInSecond>(linear_first));
    CHECK(std::get<LinearInSecond>(linear_first).f1 == upoly({0, 0, 1}));
}

TEST_CASE("classifier matches are always revalidated by substitution") {
    const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    std::vector<BiPoly> samples = {
        x,
        BigRational(3) * x + BiPoly::constant(BigRational(5)),
        x * y - BiPoly::constant(BigRational(1)),
        x.pow(2) * y.pow(3) + BiPoly::constant(BigRational(1)),
        x.pow(3) * y + BiPoly::constant(BigRational(-2)),
        x.pow(2) * (x * y + BiPoly::constant(BigRational(1))).pow(3) + BiPoly::constant(BigRational(1)),
        (x.pow(2) - x) * y + BiPoly::constant(BigRational(7)),
        x.pow(2) + y.pow(2),
    };
    for (const BiPoly& f : samples) {
        NormalForm form = classify_normal_form(f);
        CHECK(validate_form(f, form));
        if (!is_unclassified(form) && !is_cuspidal(form)) {
            const auto shape = normal_shape(form);
            REQUIRE(shape.has_value());
            CHECK(apply_poly(*form_cov(form), f) == *shape);
        }
    }
}

TEST_CASE("conic specialization worked examples") {
    UniPoly t = UniPoly::variable();
    UniPoly one = UniPoly::constant(BigRational(1));

    auto r1 = conic_specialization_test(RationalFunction(t), RationalFunction(-t), sample_range(1, 50));
    CHECK(r1.all_clean());
    CHECK(r1.clean == 50);

    auto r2 = conic_specialization_test(RationalFunction(-one), RationalFunction(-one), sample_range(1, 50));
    CHECK(r2.failures.size() == 50);
    for (const auto& failure : r2.failures) {
        REQUIRE(failure.places.size() == 2);
        CHECK(failure.places[0] == Place::at(BigInt(2)));
        CHECK(failure.places[1] == Place::infinity());
    }

    auto r3 = conic_specialization_test(RationalFunction(t), RationalFunction(one - t), sample_range(2, 50));
    CHECK(r3.all_clean());

    auto r4 = conic_specialization_test(RationalFunction(t), RationalFunction(-t), sample_range(0, 3));
    CHECK(r4.skipped == std::vector<BigInt>{BigInt(0)});

    CHECK_THROWS_AS(conic_specialization_test(RationalFunction(), RationalFunction(one), sample_range(1, 2)),
                    Error);
}

TEST_CASE("image scan worked examples") {
    const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();

    auto r1 = image_scan(x.pow(2) + y.pow(2), 100, 10);
    CHECK(r1.missing == std::vector<std::int64_t>{3, 6, 7});
    CHECK(r1.negative_count == 0);
    CHECK(r1.min_value == 0);

    auto r2 = image_scan(x, 5, 3);
    CHECK(r2.missing.empty());
    CHECK(r2.min_value == BigRational(-5));

    auto r3 = image_scan(-(x.pow(2)) - y.pow(2) - BiPoly::constant(BigRational(1)), 10, 0);
    CHECK(r3.missing == std::vector<std::int64_t>{0});
    CHECK(r3.min_value == BigRational(-201));
    CHECK(r3.negatives.size() == ScanReport::kNegativeSampleCap);
    CHECK(r3.negative_count == 21 * 21);
}

TEST_CASE("image scan oracle: sums of two squares") {
    auto report = image_scan(BiPoly::var_x().pow(2) + BiPoly::var_y().pow(2), 100, 10);
    for (std::int64_t v = 0; v <= 10; ++v) {
        bool representable = false;
        for (std::int64_t a = 0; a * a <= v; ++a)
            for (std::int64_t b = 0; a * a + b * b <= v; ++b)
                if (a * a + b * b == v) representable = true;
        const bool listed = std::find(report.represented.begin(), report.represented.end(), v) !=
                            report.represented.end();
        CHECK(listed == representable);
    }
}

TEST_CASE("image scan is deterministic across worker counts") {
    const BiPoly f = BiPoly::var_x().pow(2) * BiPoly::var_y() - BiPoly::var_y().pow(2) -
                     BiPoly::constant(BigRational(3));
    auto base = image_scan(f, 30, 25, 1);
    for (int workers : {2, 3, 7}) {
        auto other = image_scan(f, 30, 25, workers);
        CHECK(other.represented == base.represented);
        CHECK(other.missing == base.missing);
        CHECK(other.negative_count == base.negative_count);
        CHECK(other.min_value == base.min_value);
        REQUIRE(other.negatives.size() == base.negatives.size());
        for (std::size_t i = 0; i < base.negatives.size(); ++i) {
            CHECK(other.negatives[i].x == base.negatives[i].x);
            CHECK(other.negatives[i].y == base.negatives[i].y);
            CHECK(other.negatives[i].value == base.negatives[i].value);
        }
    }
}

TEST_CASE("negative witness worked examples") {
    const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();

    Witness w1 = negative_witness(x, AxisLinear{ChangeOfVars::identity()},
                                  CongruenceTarget{BigRational(3), BigRational(7), BigInt(5)});
    CHECK(w1.x == -2);
    CHECK(w1.y == 7);
    CHECK(w1.value == BigRational(-2));

    BiPoly f2 = (x.pow(2) - x) * y + BiPoly::constant(BigRational(1));
    Witness w2 = negative_witness(f2, classify_normal_form(f2),
                                  CongruenceTarget{BigRational(0), BigRational(0), BigInt(3)});
    CHECK(w2.x == 3);
    CHECK(w2.y == -3);
    CHECK(w2.value == BigRational(-17));

    BiPoly f3 = x * y - BiPoly::constant(BigRational(1));
    Witness w3 = negative_witness(
        f3, TorusMonomial{1, 1, BigRational(1), BigRational(-1), ChangeOfVars::identity()},
        CongruenceTarget{BigRational(0), BigRational(0), BigInt(2)});
    CHECK(w3.x == 2);
    CHECK(w3.y == -2);
    CHECK(w3.value == BigRational(-5));
}

TEST_CASE("negative witness respects congruence targets across forms") {
    std::mt19937_64 rng(33);
    const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    const std::vector<BiPoly> corpus = {
        x,
        x - BiPoly::constant(BigRational(3)),
        (x.pow(2) - x) * y + BiPoly::constant(BigRational(7)),
        x * y - BiPoly::constant(BigRational(1)),
        x.pow(2) * y.pow(3) + BiPoly::constant(BigRational(1)),
        x.pow(2) * (x * y + BiPoly::constant(BigRational(1))).pow(3) + BiPoly::constant(BigRational(1)),
        -(x.pow(2)) - y.pow(2) - BiPoly::constant(BigRational(1)),
    };
    for (const BiPoly& f : corpus) {
        const NormalForm form = classify_normal_form(f);
        for (int i = 0; i < 25; ++i) {
            const CongruenceTarget tgt{BigRational(oracle::rand_range(rng, -20, 20)),
                                       BigRational(oracle::rand_range(rng, -20, 20)),
                                       BigInt(oracle::rand_range(rng, 1, 50))};
            const Witness w = negative_witness(f, form, tgt);
            CHECK(w.value < 0);
            CHECK(w.value == f.eval(BigRational(w.x), BigRational(w.y)));
            CHECK(tgt.met_by(BigRational(w.x), BigRational(w.y)));
        }
    }
}

TEST_CASE("nonnegative polynomials yield NoWitnessFound") {
    const BiPoly f = BiPoly::var_x().pow(2) + BiPoly::var_y().pow(2);
    try {
        negative_witness(f, classify_normal_form(f), kTrivialTarget, 20'000);
        FAIL("expected NoWitnessFound");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NoWitnessFound);
    }
    CHECK_THROWS_AS(arbitrarily_negative(f, classify_normal_form(f), 2, 20'000), Error);
}

TEST_CASE("arbitrarily negative ladders") {
    const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();

    auto ladder1 = arbitrarily_negative(x, AxisLinear{ChangeOfVars::identity()}, 3);
    REQUIRE(ladder1.size() == 3);
    CHECK(ladder1[0].value < 0);
    CHECK(ladder1[1].value < -10);
    CHECK(ladder1[2].value < -100);

    BiPoly f2 = x * y - BiPoly::constant(BigRational(1));
    auto ladder2 = arbitrarily_negative(f2, classify_normal_form(f2), 3);
    REQUIRE(ladder2.size() == 3);
    for (std::size_t k = 0; k < ladder2.size(); ++k) {
        CHECK(ladder2[k].value == f2.eval(BigRational(ladder2[k].x), BigRational(ladder2[k].y)));
        CHECK(ladder2[k].value < -rational_pow(BigRational(10), k) + 1);
    }
}

TEST_CASE("scan negatives imply witness success with the trivial target") {
    const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    const std::vector<BiPoly> corpus = {
        x,
        x * y - BiPoly::constant(BigRational(1)),
        -(x.pow(2)) - y.pow(2) - BiPoly::constant(BigRational(1)),
        x.pow(2) * y.pow(3) + BiPoly::constant(BigRational(1)),
        x.pow(2) + y.pow(2),  // no negatives in any box
    };
    for (const BiPoly& f : corpus) {
        const auto scan = image_scan(f, 12, 5);
        if (scan.negative_count == 0) continue;
        const Witness w = negative_witness(f, classify_normal_form(f), kTrivialTarget);
        CHECK(w.value < 0);
    }
}

TEST_CASE("sector witness handles irrational asymptotics") {
    const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    // Pell conic complement: y^2 - 2x^2 - 1 is negative between the branches
    const BiPoly pell = y.pow(2) - BigRational(2) * x.pow(2) - BiPoly::constant(BigRational(1));
    const QuadraticNumber sqrt2(BigRational(0), BigRational(1), BigInt(2));

    Witness w = sector_witness(pell, ChangeOfVars::identity(), sqrt2, 1,
                               CongruenceTarget{BigRational(1), BigRational(0), BigInt(7)});
    CHECK(w.value < 0);
    CHECK(mod_euclid(w.x - 1, BigInt(7)) == 0);
    CHECK(mod_euclid(w.y, BigInt(7)) == 0);

    ChangeOfVars shear;
    shear.append(make_add_x_poly_to_y(upoly({0, 0, -1})));
    const BiPoly sheared = apply_poly(shear.inverse(), pell);
    Witness w2 = sector_witness(sheared, shear, sqrt2, 1, kTrivialTarget);
    CHECK(w2.value < 0);
    CHECK(w2.value == sheared.eval(BigRational(w2.x), BigRational(w2.y)));

    CHECK_THROWS_AS(sector_witness(pell, ChangeOfVars::identity(), QuadraticNumber(BigRational(2)), 1,
                                   kTrivialTarget),
                    Error);
}

TEST_CASE("witness rejects cuspidal and non-integer targets") {
    const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    const BiPoly cusp = y.pow(2) - x.pow(3);
    CHECK_THROWS_AS(negative_witness(cusp, classify_normal_form(cusp), kTrivialTarget), Error);
    CHECK_THROWS_AS(negative_witness(x, AxisLinear{ChangeOfVars::identity()},
                                     CongruenceTarget{BigRational(1, 2), BigRational(0), BigInt(3)}),
                    Error);
}
