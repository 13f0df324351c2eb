#pragma once

#include <string>

#include "polysurj/exactmath/factorization.hpp"
#include "polysurj/exactmath/rational.hpp"

namespace polysurj {

// Element rat + rad*sqrt(D) of a real quadratic field. D is squarefree and
// greater than 1 whenever rad != 0; pure rationals are canonicalized to
// D = 0 so that equality stays componentwise. Sign and comparisons are
// exact (comparison of rat^2 against rad^2*D), never floating point.
class QuadraticNumber {
public:
    QuadraticNumber() = default;

    QuadraticNumber(const BigRational& value) : rat_(value) {}  // NOLINT: deliberate implicit lift

    QuadraticNumber(BigRational rat, BigRational rad, BigInt radicand)
        : rat_(std::move(rat)), rad_(std::move(rad)), d_(std::move(radicand)) {
        if (rad_ == 0) {
            d_ = 0;
            return;
        }
        if (d_ <= 1) fail(Errc::InvalidArgument, "radicand must exceed 1");
        if (!is_squarefree(d_)) fail(Errc::InvalidArgument, "radicand must be squarefree");
    }

    const BigRational& rational_part() const { return rat_; }
    const BigRational& radical_part() const { return rad_; }
    const BigInt& radicand() const { return d_; }

    bool is_rational() const { return rad_ == 0; }
    bool is_zero() const { return rat_ == 0 && rad_ == 0; }

    QuadraticNumber conj() const { return with_same_field(rat_, -rad_); }

    // field norm rat^2 - rad^2 * D (rational)
    BigRational norm() const { return rat_ * rat_ - rad_ * rad_ * BigRational(d_); }

    int sign() const {
        if (rad_ == 0) return sign_of(rat_);
        if (rat_ == 0) return sign_of(rad_);
        if (rat_ > 0 && rad_ > 0) return 1;
        if (rat_ < 0 && rad_ < 0) return -1;
        // mixed signs: compare rat^2 with rad^2 * D; equality would make
        // sqrt(D) rational, impossible for squarefree D > 1
        const BigRational lhs = rat_ * rat_, rhs = rad_ * rad_ * BigRational(d_);
        if (lhs == rhs) fail(Errc::InvariantViolated, "radicand admitted a rational square root");
        const bool rational_dominates = lhs > rhs;
        return rational_dominates ? sign_of(rat_) : sign_of(rad_);
    }

    QuadraticNumber operator-() const { return with_same_field(-rat_, -rad_); }

    friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
        const BigInt d = merged_radicand(x, y);
        return make_unchecked(x.rat_ + y.rat_, x.rad_ + y.rad_, d);
    }
    friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) { return x + (-y); }

    friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
        const BigInt d = merged_radicand(x, y);
        return make_unchecked(x.rat_ * y.rat_ + x.rad_ * y.rad_ * BigRational(d),
                              x.rat_ * y.rad_ + x.rad_ * y.rat_, d);
    }

    friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
        if (y.is_zero()) fail(Errc::InvalidArgument, "division by zero quadratic number");
        const QuadraticNumber scaled = x * y.conj();
        const BigRational n = y.norm();
        return make_unchecked(scaled.rat_ / n, scaled.rad_ / n, scaled.d_);
    }

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
        return x.rat_ == y.rat_ && x.rad_ == y.rad_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(x == y); }
    friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() > 0; }

    std::string str() const {
        if (rad_ == 0) return to_decimal(rat_);
        std::string radical = (rad_ == 1 ? "" : rad_ == -1 ? "-" : to_decimal(rad_) + "*") + "sqrt(" + d_.str() + ")";
        if (rat_ == 0) return radical;
        if (rad_ < 0) {
            QuadraticNumber neg_rad(BigRational(0), -rad_, d_);
            return to_decimal(rat_) + " - " + neg_rad.str();
        }
        return to_decimal(rat_) + " + " + radical;
    }

private:
    QuadraticNumber with_same_field(BigRational rat, BigRational rad) const {
        return make_unchecked(std::move(rat), std::move(rad), d_);
    }

    // field members already validated; only recanonicalize the D = 0 case
    static QuadraticNumber make_unchecked(BigRational rat, BigRational rad, BigInt d) {
        QuadraticNumber out;
        out.rat_ = std::move(rat);
        out.rad_ = std::move(rad);
        out.d_ = out.rad_ == 0 ? BigInt(0) : std::move(d);
        return out;
    }

    static BigInt merged_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
        if (x.d_ == 0) return y.d_;
        if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
        fail(Errc::MixedRadicands,
             "cannot combine sqrt(" + x.d_.str() + ") with sqrt(" + y.d_.str() + ")");
    }

    BigRational rat_ = 0;
    BigRational rad_ = 0;
    BigInt d_ = 0;
};

inline QuadraticNumber power(const QuadraticNumber& x, std::int64_t e) {
    if (e < 0) fail(Errc::InvalidArgument, "negative exponent");
    QuadraticNumber result(BigRational(1)), base = x;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

}  // namespace polysurj
