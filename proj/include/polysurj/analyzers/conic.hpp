#pragma once

#include <vector>

#include "polysurj/exactmath/hilbert.hpp"
#include "polysurj/polyalg/rational_function.hpp"

namespace polysurj {

// Specialization report for the conic f(T) X^2 + g(T) Y^2 = Z^2: each usable
// sample t is tested for local solvability at every relevant place.
struct ConicReport {
    struct Failure {
        BigInt t;
        std::vector<Place> places;
    };
    std::vector<Failure> failures;
    std::vector<BigInt> skipped;  // zeros/poles of f or g among the samples
    std::int64_t clean = 0;

    bool all_clean() const { return failures.empty(); }
};

inline ConicReport conic_specialization_test(const RationalFunction& f, const RationalFunction& g,
                                             const std::vector<BigInt>& samples) {
    if (f.is_zero() || g.is_zero()) fail(Errc::ZeroFunction, "conic test with an identically zero coefficient");
    ConicReport report;
    for (const BigInt& t : samples) {
        const BigRational point(t);
        bool usable = true;
        for (const RationalFunction* h : {&f, &g}) {
            if (h->num().eval(point) == 0 || h->den().eval(point) == 0) usable = false;
        }
        if (!usable) {
            report.skipped.push_back(t);
            continue;
        }
        const HilbertReport local = hilbert_global_check(f.eval(point), g.eval(point));
        if (local.solvable_everywhere())
            ++report.clean;
        else
            report.failures.push_back({t, local.failures});
    }
    return report;
}

inline std::vector<BigInt> sample_range(std::int64_t from, std::int64_t to) {
    std::vector<BigInt> out;
    for (std::int64_t t = from; t <= to; ++t) out.emplace_back(t);
    return out;
}

}  // namespace polysurj
