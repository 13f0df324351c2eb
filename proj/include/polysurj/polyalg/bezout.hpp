#pragma once

#include <algorithm>
#include <vector>

#include "polysurj/exactmath/factorization.hpp"
#include "polysurj/polyalg/integer_solve.hpp"
#include "polysurj/polyalg/unipoly.hpp"

namespace polysurj {

// Integer-coefficient cofactors witnessing coprimality: r*f + s*g == n.
// The identity is re-checked exactly at construction.
class BezoutCertificate {
public:
    BezoutCertificate(const UniPoly& f, const UniPoly& g, UniPoly r, UniPoly s, BigInt n)
        : r_(std::move(r)), s_(std::move(s)), n_(std::move(n)) {
        if (n_ == 0) fail(Errc::InvariantViolated, "Bezout certificate with zero constant");
        if (!r_.integer_coefficients() || !s_.integer_coefficients())
            fail(Errc::InvariantViolated, "Bezout cofactors must be integral");
        if (r_ * f + s_ * g != UniPoly::constant(BigRational(n_)))
            fail(Errc::InvariantViolated, "Bezout identity failed resubstitution");
    }

    const UniPoly& r() const { return r_; }
    const UniPoly& s() const { return s_; }
    const BigInt& n() const { return n_; }

private:
    UniPoly r_, s_;
    BigInt n_;
};

// Clears denominators of the extended-gcd cofactors; |n| is not minimized.
inline BezoutCertificate bezout_certificate(const UniPoly& f, const UniPoly& g) {
    ExtGcd e = uni_ext_gcd(f, g);
    if (!e.gcd.is_constant()) fail(Errc::NotCoprime, "gcd is nonconstant: " + e.gcd.str());
    const BigInt scale = lcm_of(e.u.denominator_lcm(), e.v.denominator_lcm());
    const BigRational factor(scale);
    return BezoutCertificate(f, g, factor * e.u, factor * e.v, scale);
}

// Parameter set where f(t)/g(t) is an integer.
struct IntegralParams {
    enum class Kind {
        AllIntegers,      // every integer t works
        ResidueClasses,   // exactly the classes `residues` modulo `modulus`
        FiniteSet,        // exactly the listed values (possibly empty)
    };
    Kind kind = Kind::FiniteSet;
    BigInt modulus = 0;
    std::vector<BigInt> residues;
    std::vector<BigInt> values;

    bool contains(const BigInt& t) const {
        switch (kind) {
            case Kind::AllIntegers: return true;
            case Kind::ResidueClasses:
                return std::find(residues.begin(), residues.end(), mod_euclid(t, modulus)) != residues.end();
            case Kind::FiniteSet: return std::find(values.begin(), values.end(), t) != values.end();
        }
        return false;
    }
};

// For nonconstant g this is the finite set { t : g(t) | N, f(t)/g(t) in Z }
// found by solving g(t) = +/-d over the divisors d of the certificate's N.
// For constant g = c the answer is a union of residue classes mod c.
inline IntegralParams integral_value_params(const UniPoly& f, const UniPoly& g) {
    if (!f.integer_coefficients() || !g.integer_coefficients())
        fail(Errc::InvalidArgument, "integral_value_params requires integer coefficients");
    if (g.is_zero()) fail(Errc::InvalidArgument, "zero denominator polynomial");

    IntegralParams out;
    if (g.is_constant()) {
        const BigInt c = abs_of(num_of(g.constant_term()));
        if (c == 1) {
            out.kind = IntegralParams::Kind::AllIntegers;
            return out;
        }
        std::vector<BigInt> residues;
        for (BigInt r = 0; r < c; ++r)
            if (mod_euclid(num_of(f.eval(BigRational(r))), c) == 0) residues.push_back(r);
        if (static_cast<BigInt>(residues.size()) == c) {
            out.kind = IntegralParams::Kind::AllIntegers;
        } else if (!residues.empty()) {
            out.kind = IntegralParams::Kind::ResidueClasses;
            out.modulus = c;
            out.residues = std::move(residues);
        }
        return out;
    }

    const BezoutCertificate cert = bezout_certificate(f, g);
    std::vector<BigInt> found;
    for (const BigInt& d : divisors(cert.n())) {
        for (int s : {1, -1}) {
            for (const BigInt& t : solve_integer_equal(g, s * d)) {
                const BigInt gt = num_of(g.eval(BigRational(t)));
                const BigInt ft = num_of(f.eval(BigRational(t)));
                if (gt != 0 && ft % gt == 0) found.push_back(t);
            }
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    out.values = std::move(found);
    return out;
}

}  // namespace polysurj
