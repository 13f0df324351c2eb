#pragma once

#include <deque>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "polysurj/changevars/elementary.hpp"

namespace polysurj {

// Normal forms of polynomials whose zero set can avoid being of log general
// type: a coordinate line, the two punctured-line monomial shapes, the
// auxiliary-fibration shape f1(u)v + f2(u), and the excluded singular cusp.
// Every stored ChangeOfVars reproduces the match exactly.
struct AxisLinear {
    ChangeOfVars cov;  // applying it to the input yields the polynomial x
};

struct TorusMonomial {  // scale * x^a y^b + shift, gcd(a, b) = 1
    std::int64_t a = 1, b = 1;
    BigRational scale, shift;
    ChangeOfVars cov;
};

struct TwistedMonomial {  // scale * x^a (x^ell y + p(x))^b + shift
    std::int64_t a = 1, ell = 1, b = 1;
    UniPoly p;  // deg p < ell, p(0) != 0
    BigRational scale, shift;
    ChangeOfVars cov;
};

struct LinearInSecond {  // f1(x) y + f2(x), deg f2 < deg f1
    UniPoly f1, f2;
    ChangeOfVars cov;
};

struct CuspidalExcluded {  // curve equivalent to y^n = x^m, coprime n, m >= 2
    std::int64_t n = 2, m = 3;
};

struct Unclassified {};

using NormalForm =
    std::variant<AxisLinear, TorusMonomial, TwistedMonomial, LinearInSecond, CuspidalExcluded, Unclassified>;

inline bool is_unclassified(const NormalForm& form) { return std::holds_alternative<Unclassified>(form); }
inline bool is_cuspidal(const NormalForm& form) { return std::holds_alternative<CuspidalExcluded>(form); }

// canonical polynomial each classified form normalizes to
inline std::optional<BiPoly> normal_shape(const NormalForm& form) {
    const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    if (std::holds_alternative<AxisLinear>(form)) return x;
    if (const auto* torus = std::get_if<TorusMonomial>(&form))
        return torus->scale * (x.pow(static_cast<std::uint64_t>(torus->a)) *
                               y.pow(static_cast<std::uint64_t>(torus->b))) +
               BiPoly::constant(torus->shift);
    if (const auto* tw = std::get_if<TwistedMonomial>(&form)) {
        const BiPoly inner = x.pow(static_cast<std::uint64_t>(tw->ell)) * y + BiPoly::from_unipoly_x(tw->p);
        return tw->scale * (x.pow(static_cast<std::uint64_t>(tw->a)) *
                            inner.pow(static_cast<std::uint64_t>(tw->b))) +
               BiPoly::constant(tw->shift);
    }
    if (const auto* lin = std::get_if<LinearInSecond>(&form))
        return BiPoly::from_unipoly_x(lin->f1) * y + BiPoly::from_unipoly_x(lin->f2);
    return std::nullopt;
}

inline const ChangeOfVars* form_cov(const NormalForm& form) {
    if (const auto* a = std::get_if<AxisLinear>(&form)) return &a->cov;
    if (const auto* t = std::get_if<TorusMonomial>(&form)) return &t->cov;
    if (const auto* w = std::get_if<TwistedMonomial>(&form)) return &w->cov;
    if (const auto* l = std::get_if<LinearInSecond>(&form)) return &l->cov;
    return nullptr;
}

inline std::string form_name(const NormalForm& form) {
    if (std::holds_alternative<AxisLinear>(form)) return "AxisLinear";
    if (std::holds_alternative<TorusMonomial>(form)) return "TorusMonomial";
    if (std::holds_alternative<TwistedMonomial>(form)) return "TwistedMonomial";
    if (std::holds_alternative<LinearInSecond>(form)) return "LinearInSecond";
    if (std::holds_alternative<CuspidalExcluded>(form)) return "CuspidalExcluded";
    return "Unclassified";
}

// exact revalidation of the stored change of variables
inline bool validate_form(const BiPoly& input, const NormalForm& form) {
    if (std::holds_alternative<Unclassified>(form)) return true;
    if (const auto* cusp = std::get_if<CuspidalExcluded>(&form)) {
        if (input.terms().size() != 2) return false;
        return input.coeff(cusp->m, 0) != 0 && input.coeff(0, cusp->n) != 0;
    }
    const auto shape = normal_shape(form);
    return shape && apply_poly(*form_cov(form), input) == *shape;
}

namespace detail {

inline std::optional<NormalForm> match_linear_in_y(const BiPoly& g, const ChangeOfVars& base) {
    if (g.degree_y() != 1) return std::nullopt;
    const UniPoly f1 = g.coeff_of_y(1);
    const UniPoly f2 = g.coeff_of_y(0);
    if (f1.is_constant()) {
        // c y + f2(x) is a coordinate after scaling, shearing and a swap
        ChangeOfVars cov = base;
        const BigRational c = f1.constant_term();
        if (c != 1) cov.append(make_scale_y(c));
        if (!f2.is_zero()) cov.append(make_add_x_poly_to_y(f2));
        cov.append(make_swap());
        return AxisLinear{std::move(cov)};
    }
    auto [q, r] = divrem(f2, f1);
    ChangeOfVars cov = base;
    if (!q.is_zero()) cov.append(make_add_x_poly_to_y(q));
    return LinearInSecond{f1, r, std::move(cov)};
}

inline std::optional<NormalForm> match_linear_univariate_x(const BiPoly& g, const ChangeOfVars& base) {
    if (g.degree_y() != -1 && g.degree_y() != 0) return std::nullopt;
    if (g.degree_x() != 1) return std::nullopt;
    const UniPoly f = g.coeff_of_y(0);
    ChangeOfVars cov = base;
    if (f.leading() != 1) cov.append(make_scale_x(f.leading()));
    if (f.constant_term() != 0) cov.append(make_add_y_poly_to_x(UniPoly::constant(f.constant_term())));
    return AxisLinear{std::move(cov)};
}

inline std::optional<NormalForm> match_torus(const BiPoly& g, const ChangeOfVars& base) {
    BigRational scale, shift;
    std::int64_t a = 0, b = 0;
    for (const auto& [key, c] : g.terms()) {
        if (key.first == 0 && key.second == 0) {
            shift = c;
            continue;
        }
        if (a != 0 || b != 0) return std::nullopt;  // a second nonconstant term
        a = key.first;
        b = key.second;
        scale = c;
    }
    if (a < 1 || b < 1) return std::nullopt;
    if (gcd_of(BigInt(a), BigInt(b)) != 1) return std::nullopt;
    return TorusMonomial{a, b, scale, shift, base};
}

inline std::optional<NormalForm> match_twisted(const BiPoly& g, const ChangeOfVars& base) {
    const BigRational shift = g.coeff(0, 0);
    const BiPoly body = g - BiPoly::constant(shift);
    if (body.is_zero()) return std::nullopt;

    std::int64_t a = std::numeric_limits<std::int64_t>::max();
    for (const auto& [key, c] : body.terms()) a = std::min(a, key.first);
    if (a < 1) return std::nullopt;

    BiPoly h;  // body / x^a
    for (const auto& [key, c] : body.terms()) h = h + BiPoly::monomial(c, key.first - a, key.second);
    const std::int64_t b = h.degree_y();
    if (b < 2) return std::nullopt;  // b = 1 is the linear case, b = 0 is univariate
    if (gcd_of(BigInt(a), BigInt(b)) != 1) return std::nullopt;

    const UniPoly top = h.coeff_of_y(b);  // must be scale * x^(ell*b)
    std::int64_t nonzero_terms = 0;
    for (const auto& c : top.coeffs())
        if (c != 0) ++nonzero_terms;
    if (nonzero_terms != 1) return std::nullopt;
    const std::int64_t lb = top.degree();
    if (lb <= 0 || lb % b != 0) return std::nullopt;
    const std::int64_t ell = lb / b;
    const BigRational scale = top.leading();

    // coefficient of y^(b-1) is scale * b * x^(ell(b-1)) * p(x)
    const UniPoly next = h.coeff_of_y(b - 1);
    auto [p, rem] = divrem(next, UniPoly::monomial(scale * BigRational(b), static_cast<std::size_t>(ell * (b - 1))));
    if (!rem.is_zero() || p.is_zero()) return std::nullopt;
    if (p.degree() >= ell || p.constant_term() == 0) return std::nullopt;

    NormalForm candidate = TwistedMonomial{a, ell, b, p, scale, shift, base};
    const BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    const BiPoly rebuilt = scale * (x.pow(static_cast<std::uint64_t>(a)) *
                                    (x.pow(static_cast<std::uint64_t>(ell)) * y + BiPoly::from_unipoly_x(p))
                                        .pow(static_cast<std::uint64_t>(b))) +
                           BiPoly::constant(shift);
    if (rebuilt != g) return std::nullopt;
    return candidate;
}

inline std::optional<NormalForm> match_cuspidal(const BiPoly& g) {
    if (g.terms().size() != 2) return std::nullopt;
    std::int64_t m = -1, n = -1;
    for (const auto& [key, c] : g.terms()) {
        if (key.second == 0 && key.first >= 2)
            m = key.first;
        else if (key.first == 0 && key.second >= 2)
            n = key.second;
        else
            return std::nullopt;
    }
    if (m < 2 || n < 2 || gcd_of(BigInt(m), BigInt(n)) != 1) return std::nullopt;
    return CuspidalExcluded{n, m};
}

inline std::optional<NormalForm> try_syntactic(const BiPoly& g, const ChangeOfVars& base,
                                               bool allow_cuspidal) {
    // order matters: degree-1 shapes, monomial shapes, then the cusp
    if (auto r = match_linear_in_y(g, base)) return r;
    if (auto r = match_linear_univariate_x(g, base)) return r;
    if (g.degree_x() == 1 && g.degree_y() != 1) {
        ChangeOfVars swapped = base;
        swapped.append(make_swap());
        if (auto r = match_linear_in_y(g.swap_vars(), swapped)) return r;
    }
    if (auto r = match_torus(g, base)) return r;
    {
        ChangeOfVars swapped = base;
        swapped.append(make_swap());
        if (auto r = match_torus(g.swap_vars(), swapped)) return r;
    }
    if (auto r = match_twisted(g, base)) return r;
    {
        ChangeOfVars swapped = base;
        swapped.append(make_swap());
        if (auto r = match_twisted(g.swap_vars(), swapped)) return r;
    }
    if (allow_cuspidal) {
        if (auto r = match_cuspidal(g)) return r;
    }
    return std::nullopt;
}

inline std::vector<ElementaryOp> classifier_op_menu(std::int64_t poly_degree_bound) {
    std::vector<ElementaryOp> menu;
    menu.push_back(make_swap());
    menu.push_back(make_scale_x(BigRational(-1)));
    menu.push_back(make_scale_y(BigRational(-1)));
    for (std::int64_t k = 0; k <= poly_degree_bound; ++k) {
        for (int s : {1, -1}) {
            menu.push_back(make_add_x_poly_to_y(UniPoly::monomial(BigRational(s), static_cast<std::size_t>(k))));
            menu.push_back(make_add_y_poly_to_x(UniPoly::monomial(BigRational(s), static_cast<std::size_t>(k))));
        }
    }
    return menu;
}

}  // namespace detail

// Syntactic classifier up to a change of variables: degree-1 detection
// first, then the monomial forms (directly, under supplied hints, and under
// a bounded breadth-first search over elementary operations), then the
// cuspidal shape; Unclassified is the honest fallback, never an error.
inline NormalForm classify_normal_form(const BiPoly& input, const std::vector<ChangeOfVars>& hints = {},
                                       std::int64_t search_depth = 3, std::size_t search_budget = 20'000) {
    if (input.is_constant()) fail(Errc::ConstantFunction, "cannot classify a constant polynomial");

    auto finish = [&input](NormalForm form) {
        if (!validate_form(input, form)) fail(Errc::InvariantViolated, "classifier produced an invalid match");
        return form;
    };

    if (auto direct = detail::try_syntactic(input, ChangeOfVars::identity(), true)) return finish(*direct);

    for (const ChangeOfVars& hint : hints) {
        const BiPoly moved = apply_poly(hint, input);
        if (auto r = detail::try_syntactic(moved, hint, false)) return finish(*r);
    }

    if (search_depth > 0) {
        const std::int64_t degree_bound = std::min<std::int64_t>(std::max(input.total_degree(), std::int64_t(1)), 4);
        const auto menu = detail::classifier_op_menu(degree_bound);
        std::set<std::string> seen{input.str()};
        struct Node {
            ChangeOfVars cov;
            BiPoly poly;
            std::int64_t depth;
        };
        std::deque<Node> queue{{ChangeOfVars::identity(), input, 0}};
        std::size_t budget = search_budget;
        while (!queue.empty()) {
            Node node = std::move(queue.front());
            queue.pop_front();
            if (node.depth >= search_depth) continue;
            for (const ElementaryOp& op : menu) {
                if (budget-- == 0) return Unclassified{};
                ChangeOfVars cov = node.cov;
                cov.append(op);
                BiPoly moved = apply_poly(op, node.poly);
                if (!seen.insert(moved.str()).second) continue;
                if (auto r = detail::try_syntactic(moved, cov, false)) return finish(*r);
                queue.push_back({std::move(cov), std::move(moved), node.depth + 1});
            }
        }
    }
    return Unclassified{};
}

}  // namespace polysurj
