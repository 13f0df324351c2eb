#pragma once

#include <optional>
#include <thread>
#include <vector>

#include "polysurj/polyalg/bipoly.hpp"

namespace polysurj {

struct ScanPoint {
    BigInt x, y;
    BigRational value;
};

// Exhaustive exact evaluation of F on the box [-B, B]^2: which naturals up
// to the bound are represented, which are missing, where F goes negative.
struct ScanReport {
    std::int64_t box = 0;
    std::int64_t bound = 0;
    std::vector<std::int64_t> represented;  // naturals <= bound attained in the box
    std::vector<std::int64_t> missing;      // the complement within 0..bound
    std::vector<ScanPoint> negatives;       // first points with F < 0 in scan order, capped
    std::int64_t negative_count = 0;        // total count of negative-value points
    BigRational min_value;

    static constexpr std::size_t kNegativeSampleCap = 100;
};

namespace detail {

struct ScanChunk {
    std::vector<char> represented;
    std::vector<ScanPoint> negatives;
    std::int64_t negative_count = 0;
    std::optional<BigRational> min_value;
};

// rows[j] = integer coefficient vector (in x) of y^j, for the fast path
struct IntRows {
    std::vector<std::vector<BigInt>> rows;
};

inline IntRows integer_rows(const BiPoly& f) {
    IntRows out;
    const std::int64_t dy = std::max<std::int64_t>(f.degree_y(), 0);
    out.rows.resize(static_cast<std::size_t>(dy + 1));
    for (std::int64_t j = 0; j <= dy; ++j) {
        const UniPoly row = f.coeff_of_y(j);
        auto& coeffs = out.rows[static_cast<std::size_t>(j)];
        coeffs.resize(static_cast<std::size_t>(row.degree() + 1));
        for (std::int64_t i = 0; i <= row.degree(); ++i) coeffs[static_cast<std::size_t>(i)] = num_of(row.coeff(i));
    }
    return out;
}

inline BigInt horner_int(const std::vector<BigInt>& coeffs, const BigInt& x) {
    BigInt acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

template <class Value, class EvalColumn>
void scan_stripe(std::int64_t x_from, std::int64_t x_to, std::int64_t box, std::int64_t bound,
                 ScanChunk& chunk, const EvalColumn& eval_column) {
    chunk.represented.assign(static_cast<std::size_t>(bound) + 1, 0);
    std::vector<Value> column;
    for (std::int64_t x = x_from; x <= x_to; ++x) {
        eval_column(x, column);  // column[j] = A_j(x)
        for (std::int64_t y = -box; y <= box; ++y) {
            Value acc{};
            const Value yy(y);
            for (std::size_t j = column.size(); j-- > 0;) acc = acc * yy + column[j];
            const BigRational value(acc);
            if (value < 0) {
                ++chunk.negative_count;
                if (chunk.negatives.size() < ScanReport::kNegativeSampleCap)
                    chunk.negatives.push_back({BigInt(x), BigInt(y), value});
            } else if (is_integer(value) && value <= bound) {
                chunk.represented[static_cast<std::size_t>(num_of(value))] = 1;
            }
            if (!chunk.min_value || value < *chunk.min_value) chunk.min_value = value;
        }
    }
}

}  // namespace detail

// Workers partition the x-range into contiguous stripes; results merge by
// set union in stripe order, so the report is identical for every worker
// count.
inline ScanReport image_scan(const BiPoly& f, std::int64_t box, std::int64_t bound, int workers = 1) {
    if (box < 0 || bound < 0) fail(Errc::InvalidArgument, "box radius and bound must be nonnegative");
    ScanReport report;
    report.box = box;
    report.bound = bound;

    const std::int64_t width = 2 * box + 1;
    const int worker_count = static_cast<int>(std::max<std::int64_t>(
        1, std::min<std::int64_t>({static_cast<std::int64_t>(workers), width, 64})));
    std::vector<detail::ScanChunk> chunks(static_cast<std::size_t>(worker_count));

    const bool integral = f.integer_coefficients();
    const detail::IntRows int_rows = integral ? detail::integer_rows(f) : detail::IntRows{};
    std::vector<UniPoly> rat_rows;
    if (!integral) {
        for (std::int64_t j = 0; j <= std::max<std::int64_t>(f.degree_y(), 0); ++j)
            rat_rows.push_back(f.coeff_of_y(j));
    }

    auto run_stripe = [&](int index) {
        const std::int64_t chunk_width = width / worker_count, extra = width % worker_count;
        std::int64_t from = -box + index * chunk_width + std::min<std::int64_t>(index, extra);
        std::int64_t size = chunk_width + (index < extra ? 1 : 0);
        if (size <= 0) return;
        detail::ScanChunk& chunk = chunks[static_cast<std::size_t>(index)];
        if (integral) {
            detail::scan_stripe<BigInt>(from, from + size - 1, box, bound, chunk,
                                        [&](std::int64_t x, std::vector<BigInt>& column) {
                                            column.resize(int_rows.rows.size());
                                            const BigInt xv(x);
                                            for (std::size_t j = 0; j < int_rows.rows.size(); ++j)
                                                column[j] = detail::horner_int(int_rows.rows[j], xv);
                                        });
        } else {
            detail::scan_stripe<BigRational>(from, from + size - 1, box, bound, chunk,
                                             [&](std::int64_t x, std::vector<BigRational>& column) {
                                                 column.resize(rat_rows.size());
                                                 const BigRational xv(x);
                                                 for (std::size_t j = 0; j < rat_rows.size(); ++j)
                                                     column[j] = rat_rows[j].eval(xv);
                                             });
        }
    };

    if (worker_count == 1) {
        run_stripe(0);
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < worker_count; ++i) pool.emplace_back(run_stripe, i);
        for (auto& th : pool) th.join();
    }

    std::vector<char> represented(static_cast<std::size_t>(bound) + 1, 0);
    std::optional<BigRational> min_value;
    for (const auto& chunk : chunks) {
        for (std::size_t v = 0; v < chunk.represented.size(); ++v)
            if (chunk.represented[v]) represented[v] = 1;
        for (const auto& pt : chunk.negatives)
            if (report.negatives.size() < ScanReport::kNegativeSampleCap) report.negatives.push_back(pt);
        report.negative_count += chunk.negative_count;
        if (chunk.min_value && (!min_value || *chunk.min_value < *min_value)) min_value = chunk.min_value;
    }
    for (std::int64_t v = 0; v <= bound; ++v) {
        if (represented[static_cast<std::size_t>(v)])
            report.represented.push_back(v);
        else
            report.missing.push_back(v);
    }
    report.min_value = min_value.value_or(BigRational(0));
    return report;
}

}  // namespace polysurj
