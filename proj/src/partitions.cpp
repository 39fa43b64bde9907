#include "qloz/partitions.hpp"

#include <stdexcept>
#include <vector>

#include "qloz/enumerate.hpp"
#include "qloz/errors.hpp"
#include "qloz/exponents.hpp"

namespace qloz {

namespace {

// Row-major recursive generation with the monotonicity bounds baked in.
// Bounds are inclusive per cell; a cell's value is further capped by its left
// and upper neighbours.
struct PPGen {
    long long rows, cols;
    std::vector<long long> lo, hi;
    std::vector<long long> val;
    BigInt count = 0;
    QPoly volume;
    bool want_poly = false;
    long long volume_acc = 0;

    void rec(long long r, long long c) {
        if (r == rows) {
            ++count;
            if (want_poly) volume.add_term(volume_acc, 1);
            return;
        }
        long long nr = r, nc = c + 1;
        if (nc == cols) nr = r + 1, nc = 0;
        long long cap = hi[r * cols + c];
        if (c > 0) cap = std::min(cap, val[r * cols + c - 1]);
        if (r > 0) cap = std::min(cap, val[(r - 1) * cols + c]);
        for (long long v = lo[r * cols + c]; v <= cap; ++v) {
            val[r * cols + c] = v;
            volume_acc += v;
            rec(nr, nc);
            volume_acc -= v;
        }
    }

    void run() {
        if (rows == 0 || cols == 0) {
            count = 1;
            if (want_poly) volume.add_term(0, 1);
            return;
        }
        // Each entry dominates everything below and to its right, so lower
        // bounds propagate up-left and upper bounds down-right.
        for (long long r = rows - 1; r >= 0; --r)
            for (long long c = cols - 1; c >= 0; --c) {
                long long m = lo[r * cols + c];
                if (r + 1 < rows) m = std::max(m, lo[(r + 1) * cols + c]);
                if (c + 1 < cols) m = std::max(m, lo[r * cols + c + 1]);
                lo[r * cols + c] = m;
            }
        for (long long r = 0; r < rows; ++r)
            for (long long c = 0; c < cols; ++c) {
                long long m = hi[r * cols + c];
                if (r > 0) m = std::min(m, hi[(r - 1) * cols + c]);
                if (c > 0) m = std::min(m, hi[r * cols + c - 1]);
                hi[r * cols + c] = m;
                if (lo[r * cols + c] > m) return;  // infeasible, count stays 0
            }
        val.assign(rows * cols, 0);
        rec(0, 0);
    }
};

PPGen box_generator(long long rows, long long cols, long long maxent) {
    PPGen g;
    g.rows = rows;
    g.cols = cols;
    auto n = static_cast<std::size_t>(std::max<long long>(rows * cols, 1));
    g.lo.assign(n, 0);
    g.hi.assign(n, maxent);
    return g;
}

}  // namespace

BigInt pp_count_box(long long rows, long long cols, long long maxent, long long limit) {
    if (rows * cols * maxent > limit)
        throw BoxTooLargeError("box exceeds the brute-force bound");
    PPGen g = box_generator(rows, cols, maxent);
    g.run();
    return g.count;
}

QPoly pp_volume_poly(long long rows, long long cols, long long maxent, long long limit) {
    if (rows * cols * maxent > limit)
        throw BoxTooLargeError("box exceeds the brute-force bound");
    PPGen g = box_generator(rows, cols, maxent);
    g.want_poly = true;
    g.run();
    return g.volume;
}

BigInt constrained_pp_count(long long a, long long b, long long c, long long x, long long y,
                            long long z, long long cell_limit) {
    const long long rows = z + x + a + b;
    const long long cols = x + y + b + c;
    const long long maxent = y + z + c + a;
    if (rows * cols * std::max<long long>(maxent, 1) > cell_limit)
        throw BoxTooLargeError("constrained box exceeds the brute-force bound");

    PPGen g = box_generator(rows, cols, maxent);
    auto pin = [&](long long r, long long col, long long v) {
        g.lo[r * cols + col] = std::max(g.lo[r * cols + col], v);
        g.hi[r * cols + col] = std::min(g.hi[r * cols + col], v);
    };
    // First z+b entries of columns 1..c are the maximum; the rest of those
    // columns are at most y+z+a.
    for (long long col = 0; col < c && col < cols; ++col) {
        for (long long r = 0; r < z + b && r < rows; ++r) pin(r, col, maxent);
        for (long long r = z + b; r < rows; ++r)
            g.hi[r * cols + col] = std::min(g.hi[r * cols + col], y + z + a);
    }
    // Last a entries of rows 1..b equal y+a.
    for (long long r = 0; r < b && r < rows; ++r)
        for (long long col = std::max<long long>(cols - a, 0); col < cols; ++col)
            pin(r, col, y + a);
    // Rows z+x+b+1 .. z+x+b+a: last y+b entries are 0, the rest at least a.
    for (long long r = z + x + b; r < z + x + b + a && r < rows; ++r) {
        for (long long col = std::max<long long>(cols - (y + b), 0); col < cols; ++col)
            pin(r, col, 0);
        for (long long col = 0; col < cols - (y + b); ++col)
            g.lo[r * cols + col] = std::max(g.lo[r * cols + col], a);
    }
    g.run();
    return g.count;
}

QPoly gpp_volume_poly(const RegionSpec& spec) {
    if (spec.family != RegionSpec::Family::F)
        throw std::invalid_argument("gpp_volume_poly expects an F region spec");
    const auto& p = spec.params;
    Region r = build_region(spec);
    QPoly via_wt2 =
        tiling_polynomial(r, WeightScheme::Wt2)
            .value.shifted(-exp_h(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8]));
    QPoly via_wt1 =
        tiling_polynomial(r, WeightScheme::Wt1)
            .value.shifted(-exp_g(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8]));
    if (!(via_wt2 == via_wt1))
        throw std::logic_error("wt1 and wt2 routes disagree for " + spec.to_string());
    return via_wt2;
}

}  // namespace qloz
