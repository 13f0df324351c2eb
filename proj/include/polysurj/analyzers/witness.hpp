#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polysurj/analyzers/normal_form.hpp"
#include "polysurj/changevars/congruence.hpp"

namespace polysurj {

// Integer point in a prescribed congruence class where F is negative. The
// value is rational because F may have rational coefficients.
struct Witness {
    BigInt x, y;
    BigRational value;  // F(x, y), always < 0
    CongruenceTarget target;
};

namespace detail {

// member of the class start + modulus*Z with the requested sign and
// magnitude at least `magnitude` (the nearest such)
inline BigRational class_member(const BigRational& start, const BigRational& modulus, int sgn,
                                const BigRational& magnitude) {
    const BigRational mag = magnitude > 0 ? magnitude : BigRational(1);
    if (sgn >= 0) {
        const BigInt j = rational_ceil((mag - start) / modulus);
        return start + BigRational(j) * modulus;
    }
    const BigInt j = rational_floor((-mag - start) / modulus);
    return start + BigRational(j) * modulus;
}

struct QCandidate {
    BigRational u, v;
};

// deterministic candidate streams in normalized coordinates, one per form
class CandidateStream {
public:
    CandidateStream(const NormalForm& form, const CongruenceTarget& tgt) : form_(&form), tgt_(&tgt) {}

    std::optional<QCandidate> next() {
        const BigRational modulus{tgt_->modulus};
        if (const auto* axis = std::get_if<AxisLinear>(form_)) {
            (void)axis;
            if (step_ > 0) return std::nullopt;  // exact recipe: one candidate
            ++step_;
            const BigInt d = rational_floor(tgt_->x0 / modulus) + 1;
            return QCandidate{tgt_->x0 - BigRational(d) * modulus, tgt_->y0};
        }
        if (const auto* lin = std::get_if<LinearInSecond>(form_)) {
            // shift u until f1(u) != 0, then push v below/above the root line
            const std::int64_t max_u_shifts = lin->f1.degree() + 2;
            if (step_ > max_u_shifts) return std::nullopt;
            BigRational u = tgt_->x0 + BigRational(step_) * modulus;
            ++step_;
            const BigRational f1 = lin->f1.eval(u);
            if (f1 == 0) return next();
            const BigRational root_line = -lin->f2.eval(u) / f1;
            BigRational v;
            if (f1 > 0) {
                BigInt d = rational_floor((root_line - tgt_->y0) / modulus);
                v = tgt_->y0 + BigRational(d) * modulus;
                if (v >= root_line) v = v - modulus;
            } else {
                BigInt d = rational_ceil((root_line - tgt_->y0) / modulus);
                v = tgt_->y0 + BigRational(d) * modulus;
                if (v <= root_line) v = v + modulus;
            }
            return QCandidate{u, v};
        }
        if (const auto* torus = std::get_if<TorusMonomial>(form_)) {
            if (step_ > 64) return std::nullopt;
            int sign_u = 1, sign_v = 1;
            if (torus->b % 2 == 1)
                sign_v = torus->scale > 0 ? -1 : 1;
            else
                sign_u = torus->scale > 0 ? -1 : 1;  // gcd(a,b)=1 makes a odd here
            const BigRational u = class_member(tgt_->x0, modulus, sign_u, BigRational(1));
            const BigRational v =
                class_member(tgt_->y0, modulus, sign_v, rational_pow(BigRational(2), static_cast<std::uint64_t>(step_)));
            ++step_;
            return QCandidate{u, v};
        }
        if (const auto* tw = std::get_if<TwistedMonomial>(form_)) {
            if (step_ > 64) return std::nullopt;
            int sign_u = 1, sign_w = 1;
            if (tw->b % 2 == 1)
                sign_w = tw->scale > 0 ? -1 : 1;
            else
                sign_u = tw->scale > 0 ? -1 : 1;  // a odd by gcd(a,b)=1
            const BigRational u = class_member(tgt_->x0, modulus, sign_u, BigRational(1));
            const BigRational u_ell = rational_pow(u, static_cast<std::uint64_t>(tw->ell));
            // w = u^ell v + p(u) runs over w0 + (N u^ell) Z as v runs over its class
            const BigRational w0 = u_ell * tgt_->y0 + tw->p.eval(u);
            const BigRational w_step = abs_of(modulus * u_ell);
            const BigRational w = class_member(
                w0, w_step, sign_w, rational_pow(BigRational(2), static_cast<std::uint64_t>(step_)));
            ++step_;
            const BigRational v = (w - tw->p.eval(u)) / u_ell;
            return QCandidate{u, v};
        }
        return std::nullopt;
    }

private:
    const NormalForm* form_;
    const CongruenceTarget* tgt_;
    std::int64_t step_ = 0;
};

// expanding square shells over the congruence lattice, in a fixed order
template <class Visit>
bool lattice_shells(const CongruenceTarget& tgt, std::int64_t budget, const Visit& visit) {
    const BigRational modulus{tgt.modulus};
    for (std::int64_t r = 0;; ++r) {
        auto try_point = [&](std::int64_t i, std::int64_t j) -> int {
            if (budget-- <= 0) return -1;
            return visit(tgt.x0 + BigRational(i) * modulus, tgt.y0 + BigRational(j) * modulus) ? 1 : 0;
        };
        if (r == 0) {
            const int res = try_point(0, 0);
            if (res != 0) return res > 0;
            continue;
        }
        for (std::int64_t i = -r; i <= r; ++i)
            for (std::int64_t j : {-r, r}) {
                const int res = try_point(i, j);
                if (res != 0) return res > 0;
            }
        for (std::int64_t j = -r + 1; j <= r - 1; ++j)
            for (std::int64_t i : {-r, r}) {
                const int res = try_point(i, j);
                if (res != 0) return res > 0;
            }
    }
}

inline NormalForm shift_form(const NormalForm& form, const BigRational& c) {
    if (const auto* axis = std::get_if<AxisLinear>(&form)) {
        AxisLinear out = *axis;
        if (c != 0) out.cov.append(make_add_y_poly_to_x(UniPoly::constant(c)));
        return out;
    }
    if (const auto* lin = std::get_if<LinearInSecond>(&form)) {
        LinearInSecond out = *lin;
        out.f2 = out.f2 + UniPoly::constant(c);
        return out;
    }
    if (const auto* torus = std::get_if<TorusMonomial>(&form)) {
        TorusMonomial out = *torus;
        out.shift += c;
        return out;
    }
    if (const auto* tw = std::get_if<TwistedMonomial>(&form)) {
        TwistedMonomial out = *tw;
        out.shift += c;
        return out;
    }
    return form;
}

}  // namespace detail

// Constructive negative-value witness: classified forms use their exact
// recipes in normalized coordinates (targets transported through the
// inverse change of variables); anything else falls back to expanding
// shells over the congruence lattice. Every candidate is verified by exact
// evaluation and exact congruence checks before being returned.
inline Witness negative_witness(const BiPoly& f, const NormalForm& form, const CongruenceTarget& tgt,
                                std::int64_t budget = 1'000'000) {
    if (is_cuspidal(form)) fail(Errc::InvalidArgument, "no witness recipe for the excluded cuspidal form");
    if (!is_integer(tgt.x0) || !is_integer(tgt.y0))
        fail(Errc::InvalidArgument, "witness targets need integer base points");

    auto verified = [&](const BigRational& x, const BigRational& y) -> std::optional<Witness> {
        if (!is_integer(x) || !is_integer(y)) return std::nullopt;
        if (!tgt.met_by(x, y)) return std::nullopt;
        const BigRational value = f.eval(x, y);
        if (!(value < 0)) return std::nullopt;
        return Witness{num_of(x), num_of(y), value, tgt};
    };

    if (!is_unclassified(form)) {
        const ChangeOfVars& cov = *form_cov(form);
        const ChangeOfVars back = cov.inverse();
        const CongruenceTarget normalized = transport_target_through(tgt, back);
        detail::CandidateStream stream(form, normalized);
        while (auto candidate = stream.next()) {
            if (budget-- <= 0) break;
            const RatPoint p = apply_point(back, {candidate->u, candidate->v});
            if (auto w = verified(p.x, p.y)) return *w;
        }
    }

    std::optional<Witness> found;
    detail::lattice_shells(tgt, budget, [&](const BigRational& x, const BigRational& y) {
        found = verified(x, y);
        return found.has_value();
    });
    if (found) return *found;
    fail(Errc::NoWitnessFound, "no negative value within the search budget");
}

// Witnesses of arbitrarily negative values: the k-th satisfies
// F < -10^(k-1), obtained by running the witness search against the
// shifted polynomial F + 10^(k-1) with a correspondingly shifted form.
inline std::vector<Witness> arbitrarily_negative(const BiPoly& f, const NormalForm& form, std::int64_t depth,
                                                 std::int64_t budget = 1'000'000) {
    std::vector<Witness> out;
    const CongruenceTarget trivial{BigRational(0), BigRational(0), BigInt(1)};
    for (std::int64_t k = 1; k <= depth; ++k) {
        const BigRational cut = rational_pow(BigRational(10), static_cast<std::uint64_t>(k - 1));
        const BiPoly shifted = f + BiPoly::constant(cut);
        const Witness w = negative_witness(shifted, detail::shift_form(form, cut), trivial, budget);
        const BigRational value = f.eval(BigRational(w.x), BigRational(w.y));
        if (!(value < -cut)) fail(Errc::InvariantViolated, "shifted witness failed the depth bound");
        out.push_back({w.x, w.y, value, trivial});
    }
    return out;
}

// Sector search for the irrational-asymptotics case: after the reducing
// change of variables and the rational-part shear, the curve's two branches
// grow like +/- beta sqrt(D) u^d, so F has one sign in the middle sector and
// the other outside; candidates from both regions are tried exactly.
inline Witness sector_witness(const BiPoly& f, const ChangeOfVars& reduction_cov,
                              const QuadraticNumber& ratio, std::int64_t exponent,
                              const CongruenceTarget& tgt, std::int64_t budget = 1'000'000) {
    if (ratio.is_rational()) fail(Errc::InvalidArgument, "sector search expects an irrational ratio");
    if (!is_integer(tgt.x0) || !is_integer(tgt.y0))
        fail(Errc::InvalidArgument, "witness targets need integer base points");

    ChangeOfVars total = reduction_cov;
    if (ratio.rational_part() != 0)
        total.append(make_add_x_poly_to_y(
            UniPoly::monomial(-ratio.rational_part(), static_cast<std::size_t>(exponent))));
    const ChangeOfVars back = total.inverse();
    const CongruenceTarget normalized = transport_target_through(tgt, back);
    const BigRational modulus{normalized.modulus};

    // coarse integer overestimate of |beta| sqrt(D)
    const BigRational beta = abs_of(ratio.radical_part());
    const BigRational envelope = (beta + 1) * BigRational(isqrt_of(ratio.radicand()) + 1) * 2;

    auto verified = [&](const BigRational& x, const BigRational& y) -> std::optional<Witness> {
        if (!is_integer(x) || !is_integer(y)) return std::nullopt;
        if (!tgt.met_by(x, y)) return std::nullopt;
        const BigRational value = f.eval(x, y);
        if (!(value < 0)) return std::nullopt;
        return Witness{num_of(x), num_of(y), value, tgt};
    };

    for (std::int64_t k = 0; k <= 40; ++k) {
        const BigRational scale = rational_pow(BigRational(2), static_cast<std::uint64_t>(k));
        for (int sign_u : {1, -1}) {
            const BigRational u = detail::class_member(normalized.x0, modulus, sign_u, scale);
            const BigRational growth = envelope * rational_pow(abs_of(u), static_cast<std::uint64_t>(exponent));
            std::vector<BigRational> v_candidates;
            // middle sector: the members nearest zero
            const BigRational v_mid = normalized.y0 + BigRational(rational_floor(-normalized.y0 / modulus)) * modulus;
            for (std::int64_t off = -1; off <= 2; ++off)
                v_candidates.push_back(v_mid + BigRational(off) * modulus);
            // outside both branches
            v_candidates.push_back(detail::class_member(normalized.y0, modulus, 1, growth));
            v_candidates.push_back(detail::class_member(normalized.y0, modulus, -1, growth));
            for (const BigRational& v : v_candidates) {
                if (budget-- <= 0) fail(Errc::NoWitnessFound, "sector search budget exhausted");
                const RatPoint p = apply_point(back, {u, v});
                if (auto w = verified(p.x, p.y)) return *w;
            }
        }
    }
    fail(Errc::NoWitnessFound, "sector search found no negative value");
}

}  // namespace polysurj
