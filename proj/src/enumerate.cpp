#include "qloz/enumerate.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "qloz/errors.hpp"

namespace qloz {

namespace {

int index_of(const std::vector<Cell>& cells, const Cell& c) {
    auto it = std::lower_bound(cells.begin(), cells.end(), c, ScanLess{});
    if (it == cells.end() || !(*it == c)) return -1;
    return static_cast<int>(it - cells.begin());
}

// Later-neighbor partners in scan order. An up cell can only start a right
// lozenge; a down cell can start a left or a vertical one. Earlier neighbors
// were already decided when their own scan position passed.
std::vector<Cell> later_partners(const Cell& c) {
    if (c.up) return {Cell{c.i, c.j, false}};
    return {Cell{c.i + 1, c.j, true}, Cell{c.i, c.j + 1, true}};
}

}  // namespace

TilingPolynomial tiling_polynomial(const Region& r, WeightScheme scheme) {
    const auto& cells = r.cells();
    TilingPolynomial out;
    out.region_hash = r.hash();
    out.scheme = scheme;
    if (cells.empty()) {
        out.value = QPoly::one();
        return out;
    }

    const int n = static_cast<int>(cells.size());
    // Partner deltas and weights per scan position.
    std::vector<std::vector<std::pair<int, long long>>> partners(n);
    int window = 0;
    for (int p = 0; p < n; ++p) {
        for (const Cell& q : later_partners(cells[p])) {
            int qi = index_of(cells, q);
            if (qi < 0) continue;
            Lozenge l = cells[p].up ? Lozenge{cells[p], q} : Lozenge{q, cells[p]};
            partners[p].emplace_back(qi - p, lozenge_weight_exp(l, r, scheme));
            window = std::max(window, qi - p);
        }
    }
    if (window > 62) throw FrontierTooWideError("profile window exceeds 62 cells");

    std::unordered_map<std::uint64_t, QPoly> states;
    states.emplace(0, QPoly::one());
    for (int p = 0; p < n; ++p) {
        std::unordered_map<std::uint64_t, QPoly> next;
        next.reserve(states.size() * 2);
        for (auto& [mask, poly] : states) {
            if (mask & 1ull) {
                auto [it, fresh] = next.try_emplace(mask >> 1, poly);
                if (!fresh) it->second += poly;
                continue;
            }
            for (auto& [delta, wexp] : partners[p]) {
                if (mask >> delta & 1ull) continue;
                std::uint64_t nm = (mask | (1ull << delta) | 1ull) >> 1;
                QPoly contrib = poly.shifted(wexp);
                auto [it, fresh] = next.try_emplace(nm, std::move(contrib));
                if (!fresh) it->second += contrib;
            }
        }
        states = std::move(next);
        if (states.empty()) break;  // untileable
    }

    auto it = states.find(0);
    out.value = it == states.end() ? QPoly::zero() : it->second;
    return out;
}

namespace {

struct NaiveCtx {
    const Region* region;
    WeightScheme scheme;
    std::vector<Cell> cells;         // scan order
    std::vector<bool> covered;
    QPoly total;
    std::vector<Lozenge> current;
    std::vector<std::vector<Lozenge>>* sink = nullptr;
    std::size_t limit = 0;
    long long wexp_acc = 0;

    void rec(int from) {
        int p = from;
        while (p < static_cast<int>(cells.size()) && covered[p]) ++p;
        if (p == static_cast<int>(cells.size())) {
            if (sink) {
                if (sink->size() < limit) sink->push_back(current);
            } else {
                total.add_term(wexp_acc, 1);
            }
            return;
        }
        const Cell c = cells[p];
        covered[p] = true;
        for (const Cell& nb : cell_neighbors(c)) {
            int qidx = index_of(cells, nb);
            if (qidx < 0 || covered[qidx]) continue;
            if (sink && sink->size() >= limit) break;
            Lozenge l = c.up ? Lozenge{c, nb} : Lozenge{nb, c};
            long long w = lozenge_weight_exp(l, *region, scheme);
            covered[qidx] = true;
            wexp_acc += w;
            current.push_back(l);
            rec(p + 1);
            current.pop_back();
            wexp_acc -= w;
            covered[qidx] = false;
        }
        covered[p] = false;
    }
};

}  // namespace

TilingPolynomial tiling_polynomial_naive(const Region& r, WeightScheme scheme,
                                         std::size_t max_cells) {
    if (r.size() > max_cells)
        throw RegionTooLargeError("region exceeds naive enumeration bound");
    NaiveCtx ctx;
    ctx.region = &r;
    ctx.scheme = scheme;
    ctx.cells = r.cells();
    ctx.covered.assign(ctx.cells.size(), false);
    ctx.rec(0);
    TilingPolynomial out;
    out.value = std::move(ctx.total);
    out.region_hash = r.hash();
    out.scheme = scheme;
    return out;
}

BigInt count_tilings(const Region& r) {
    return tiling_polynomial(r, WeightScheme::Unweighted).value.coeff(0);
}

std::vector<std::vector<Lozenge>> enumerate_tilings(const Region& r, std::size_t limit) {
    NaiveCtx ctx;
    ctx.region = &r;
    ctx.scheme = WeightScheme::Unweighted;
    ctx.cells = r.cells();
    ctx.covered.assign(ctx.cells.size(), false);
    std::vector<std::vector<Lozenge>> tilings;
    ctx.sink = &tilings;
    ctx.limit = limit;
    ctx.rec(0);
    return tilings;
}

}  // namespace qloz
