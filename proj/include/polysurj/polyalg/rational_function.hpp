#pragma once

#include <string>
#include <utility>

#include "polysurj/polyalg/unipoly.hpp"

namespace polysurj {

// Reduced fraction of univariate polynomials: denominator monic and coprime
// to the numerator.
class RationalFunction {
public:
    RationalFunction() : den_(UniPoly::constant(BigRational(1))) {}

    explicit RationalFunction(UniPoly num) : num_(std::move(num)), den_(UniPoly::constant(BigRational(1))) {}

    RationalFunction(UniPoly num, UniPoly den) {
        if (den.is_zero()) fail(Errc::InvalidArgument, "rational function with zero denominator");
        if (num.is_zero()) {
            num_ = UniPoly();
            den_ = UniPoly::constant(BigRational(1));
            return;
        }
        UniPoly g = uni_gcd(num, den);
        num = num / g;
        den = den / g;
        const BigRational lead = den.leading();
        num_ = inverse_of(lead) * num;
        den_ = inverse_of(lead) * den;
    }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    // order of vanishing at infinity: deg(den) - deg(num)
    std::int64_t order_at_infinity() const {
        if (is_zero()) fail(Errc::ZeroFunction, "order of zero function");
        return den_.degree() - num_.degree();
    }

    bool defined_at(const BigRational& t) const { return den_.eval(t) != 0; }

    BigRational eval(const BigRational& t) const {
        const BigRational d = den_.eval(t);
        if (d == 0) fail(Errc::InvalidArgument, "evaluation at a pole");
        return num_.eval(t) / d;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) fail(Errc::ZeroFunction, "division by the zero function");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    RationalFunction operator-() const {
        RationalFunction out = *this;
        out.num_ = -out.num_;
        return out;
    }

    RationalFunction pow(std::uint64_t e) const {
        RationalFunction result{UniPoly::constant(BigRational(1))};
        RationalFunction base = *this;
        while (e) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str(const std::string& var = "t") const {
        if (den_ == UniPoly::constant(BigRational(1))) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    UniPoly num_, den_;
};

}  // namespace polysurj
