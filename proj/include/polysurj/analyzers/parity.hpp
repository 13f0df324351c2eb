#pragma once

#include <cstdint>

#include "polysurj/exactmath/rational.hpp"

namespace polysurj {

// Verdict on the values t^ell / A at integer parameters: odd exponents force
// negative values on a half-line; even exponents with positive A produce
// squares only; even exponents with negative A make every value <= 0.
struct ParityVerdict {
    enum class Kind { EvenSquaresOnly, OddNegativeValues, NegativeEvenCase };
    Kind kind;
    int negative_half_line = 0;  // OddNegativeValues: -1 for t < 0, +1 for t > 0
};

inline ParityVerdict parity_obstruction(std::uint64_t ell, const BigRational& a) {
    if (ell == 0) fail(Errc::InvalidArgument, "exponent must be positive");
    if (a == 0) fail(Errc::ZeroArgument, "zero leading constant");
    if (ell % 2 == 1) return {ParityVerdict::Kind::OddNegativeValues, a > 0 ? -1 : +1};
    if (a > 0) return {ParityVerdict::Kind::EvenSquaresOnly, 0};
    return {ParityVerdict::Kind::NegativeEvenCase, 0};
}

}  // namespace polysurj
