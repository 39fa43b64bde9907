#include "qloz/lattice.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qloz/errors.hpp"

namespace qloz {

LozOrient Lozenge::orient() const {
    if (down.i == up.i && down.j == up.j) return LozOrient::Right;
    if (down.i == up.i - 1 && down.j == up.j) return LozOrient::Left;
    if (down.i == up.i && down.j == up.j - 1) return LozOrient::Vertical;
    throw std::invalid_argument("cells do not form a lozenge");
}

std::string to_string(WeightScheme s) {
    switch (s) {
        case WeightScheme::Unweighted: return "none";
        case WeightScheme::Wt1: return "wt1";
        case WeightScheme::Wt2: return "wt2";
        case WeightScheme::Wt3: return "wt3";
    }
    return "?";
}

std::optional<WeightScheme> weight_scheme_from_string(const std::string& s) {
    if (s == "none" || s == "unweighted") return WeightScheme::Unweighted;
    if (s == "wt1") return WeightScheme::Wt1;
    if (s == "wt2") return WeightScheme::Wt2;
    if (s == "wt3") return WeightScheme::Wt3;
    return std::nullopt;
}

std::array<Cell, 3> cell_neighbors(const Cell& c) {
    if (c.up)
        return {Cell{c.i, c.j, false}, Cell{c.i - 1, c.j, false}, Cell{c.i, c.j - 1, false}};
    return {Cell{c.i, c.j, true}, Cell{c.i + 1, c.j, true}, Cell{c.i, c.j + 1, true}};
}

Region::Region(std::vector<Cell> cells, int base_row, int se_line)
    : cells_(std::move(cells)), base_row_(base_row), se_line_(se_line) {
    std::sort(cells_.begin(), cells_.end(), ScanLess{});
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool Region::contains(const Cell& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c, ScanLess{});
}

std::size_t Region::up_count() const {
    return static_cast<std::size_t>(
        std::count_if(cells_.begin(), cells_.end(), [](const Cell& c) { return c.up; }));
}

std::size_t Region::down_count() const { return cells_.size() - up_count(); }

std::vector<Cell> Region::neighbors_in(const Cell& c) const {
    std::vector<Cell> out;
    for (const Cell& n : cell_neighbors(c))
        if (contains(n)) out.push_back(n);
    return out;
}

Region Region::without(const std::vector<Cell>& removed) const {
    std::vector<Cell> rem = removed;
    std::sort(rem.begin(), rem.end(), ScanLess{});
    std::vector<Cell> kept;
    kept.reserve(cells_.size());
    for (const Cell& c : cells_)
        if (!std::binary_search(rem.begin(), rem.end(), c, ScanLess{})) kept.push_back(c);
    return Region(std::move(kept), base_row_, se_line_);
}

Region Region::with_added(const std::vector<Cell>& added) const {
    std::vector<Cell> all = cells_;
    all.insert(all.end(), added.begin(), added.end());
    return Region(std::move(all), base_row_, se_line_);
}

std::uint64_t Region::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(base_row_)));
    mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(se_line_)));
    for (const Cell& c : cells_) {
        mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(c.i)));
        mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(c.j)) << 1);
        mix(c.up ? 0x9e3779b97f4a7c15ull : 0x7f4a7c159e3779b9ull);
    }
    return h;
}

// ---------------------------------------------------------------------------
// RegionSpec

RegionSpec RegionSpec::hex(long long a, long long b, long long c) {
    return RegionSpec{Family::Hex, {a, b, c}};
}
RegionSpec RegionSpec::k(long long a, long long x, long long y, long long z, long long t) {
    return RegionSpec{Family::K, {a, x, y, z, t}};
}
RegionSpec RegionSpec::q(long long a, long long b, long long x, long long y, long long z,
                         long long t) {
    return RegionSpec{Family::Q, {a, b, x, y, z, t}};
}
RegionSpec RegionSpec::b(long long x, long long y, long long z, long long t, long long a,
                         long long b_, long long c, long long d) {
    return RegionSpec{Family::B, {x, y, z, t, a, b_, c, d}};
}
RegionSpec RegionSpec::f(long long x, long long y, long long z, long long a, long long b,
                         long long c, long long d, long long e, long long f_) {
    return RegionSpec{Family::F, {x, y, z, a, b, c, d, e, f_}};
}

const std::vector<std::string>& RegionSpec::param_names(Family f) {
    static const std::vector<std::string> hexn{"a", "b", "c"};
    static const std::vector<std::string> kn{"a", "x", "y", "z", "t"};
    static const std::vector<std::string> qn{"a", "b", "x", "y", "z", "t"};
    static const std::vector<std::string> bn{"x", "y", "z", "t", "a", "b", "c", "d"};
    static const std::vector<std::string> fn{"x", "y", "z", "a", "b", "c", "d", "e", "f"};
    switch (f) {
        case Family::Hex: return hexn;
        case Family::K: return kn;
        case Family::Q: return qn;
        case Family::B: return bn;
        case Family::F: return fn;
    }
    throw std::logic_error("bad family");
}

std::string RegionSpec::family_name(Family f) {
    switch (f) {
        case Family::Hex: return "hex";
        case Family::K: return "k";
        case Family::Q: return "q";
        case Family::B: return "b";
        case Family::F: return "f";
    }
    return "?";
}

long long RegionSpec::param(const std::string& name) const {
    const auto& names = param_names(family);
    for (std::size_t k = 0; k < names.size(); ++k)
        if (names[k] == name) return params[k];
    throw std::invalid_argument("unknown parameter " + name);
}

std::string RegionSpec::to_string() const {
    std::ostringstream os;
    os << family_name(family) << "(";
    const auto& names = param_names(family);
    for (std::size_t k = 0; k < names.size(); ++k) {
        if (k) os << ",";
        os << names[k] << "=" << params[k];
    }
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// Cell-set builders

std::vector<Cell> hexagon_cells(long long nw, long long n, long long ne, long long se,
                                long long s, long long sw) {
    if (n + ne != s + sw || nw + sw != ne + se)
        throw std::invalid_argument("hexagon side lengths do not close up");
    std::vector<Cell> cells;
    const long long rows = nw + sw;
    for (long long j = 0; j < rows; ++j) {
        long long ulo = std::max(-sw, -j), uhi = std::min(s - 1, se + s - 1 - j);
        for (long long i = ulo; i <= uhi; ++i)
            cells.push_back(Cell{static_cast<int>(i), static_cast<int>(j), true});
        long long dlo = std::max(-sw, -j - 1), dhi = std::min(s - 1, se + s - 2 - j);
        for (long long i = dlo; i <= dhi; ++i)
            cells.push_back(Cell{static_cast<int>(i), static_cast<int>(j), false});
    }
    return cells;
}

std::vector<Cell> up_triangle_cells(long long p, long long q, long long n) {
    std::vector<Cell> cells;
    for (long long j = 0; j < n; ++j) {
        for (long long i = 0; i < n - j; ++i)
            cells.push_back(Cell{static_cast<int>(p + i), static_cast<int>(q + j), true});
        for (long long i = 0; i < n - j - 1; ++i)
            cells.push_back(Cell{static_cast<int>(p + i), static_cast<int>(q + j), false});
    }
    return cells;
}

std::vector<Cell> down_triangle_cells(long long p, long long q, long long n) {
    std::vector<Cell> cells;
    // Rows q-n .. q-1; at row j the triangle holds the down cells with
    // i in [p + (q-1-j), p+n-1] and the up cells strictly inside.
    for (long long j = q - n; j < q; ++j) {
        long long lo = p + (q - 1 - j);
        for (long long i = lo; i <= p + n - 1; ++i)
            cells.push_back(Cell{static_cast<int>(i), static_cast<int>(j), false});
        for (long long i = lo + 1; i <= p + n - 1; ++i)
            cells.push_back(Cell{static_cast<int>(i), static_cast<int>(j), true});
    }
    return cells;
}

namespace {

void subtract_dent(std::vector<Cell>& hex_sorted, const std::vector<Cell>& dent,
                   const char* what) {
    for (const Cell& c : dent) {
        auto it = std::lower_bound(hex_sorted.begin(), hex_sorted.end(), c, ScanLess{});
        if (it == hex_sorted.end() || !(*it == c))
            throw std::logic_error(std::string("dent cell outside region: ") + what);
        hex_sorted.erase(it);
    }
}

}  // namespace

RegionGeometry region_geometry(const RegionSpec& spec) {
    for (long long p : spec.params)
        if (p < 0) throw std::invalid_argument("region parameters must be nonnegative");

    using F = RegionSpec::Family;
    const auto& P = spec.params;
    RegionGeometry geo;
    auto dent = [&geo](std::vector<Cell> cells) {
        geo.dent_cells.insert(geo.dent_cells.end(), cells.begin(), cells.end());
    };

    switch (spec.family) {
        case F::Hex: {
            long long a = P[0], b = P[1], c = P[2];
            geo.sides = {a, b, c, a, b, c};
            break;
        }
        case F::K: {
            long long a = P[0], x = P[1], y = P[2], z = P[3], t = P[4];
            geo.sides = {z + a, x + y, t + a, z, x + y + a, t};
            dent(up_triangle_cells(x, 0, a));
            break;
        }
        case F::Q: {
            long long a = P[0], b = P[1], x = P[2], y = P[3], z = P[4], t = P[5];
            geo.sides = {z + a + b, x + y, y + t + a + b, z, x + y + a + b, y + t};
            dent(up_triangle_cells(x, 0, a));
            dent(up_triangle_cells(x, y + z + a, b));
            break;
        }
        case F::B: {
            long long x = P[0], y = P[1], z = P[2], t = P[3];
            long long a = P[4], b = P[5], c = P[6], d = P[7];
            const long long rows = z + t + a + b + c + d;
            geo.sides = {z + b + c + d, x + y + z + t + a, t + b + c + d,
                         z + a,        x + y + z + t + b + c + d, t + a};
            dent(up_triangle_cells(x, 0, d));
            dent(up_triangle_cells(x + z + t + c + d, 0, b));
            dent(down_triangle_cells(x - a, rows, a));
            dent(up_triangle_cells(x, rows - a - c, c));
            break;
        }
        case F::F: {
            long long x = P[0], y = P[1], z = P[2];
            long long a = P[3], b = P[4], c = P[5];
            long long d = P[6], e = P[7], f = P[8];
            // Bowtie centers sit at (x+c, a), (x+c, cr), (x+c-T, cr): the
            // vertices of a down-pointing triangle of side T = x+y+z+d+e+f.
            const long long cr = x + y + z + a + d + e + f;
            geo.sides = {z + x + a + b + c, x + y + d + e + f, y + z + a + b + c,
                         z + x + d + e + f, x + y + a + b + c, y + z + d + e + f};
            dent(up_triangle_cells(x + c, 0, a));
            dent(down_triangle_cells(x + c - d, a + d, d));
            dent(up_triangle_cells(x + c, cr, b));
            dent(down_triangle_cells(x + c - e, cr, e));
            dent(up_triangle_cells(-(y + z + d + e + f), cr, c));
            dent(down_triangle_cells(c - y - z - d - e - f, cr, f));
            break;
        }
    }
    return geo;
}

Region build_region(const RegionSpec& spec) {
    RegionGeometry geo = region_geometry(spec);
    std::vector<Cell> cells = hexagon_cells(geo.sides[0], geo.sides[1], geo.sides[2],
                                            geo.sides[3], geo.sides[4], geo.sides[5]);
    std::sort(cells.begin(), cells.end(), ScanLess{});
    subtract_dent(cells, geo.dent_cells, RegionSpec::family_name(spec.family).c_str());
    return Region(std::move(cells), 0, static_cast<int>(geo.sides[4]));
}

bool is_balanced(const Region& r) { return r.up_count() == r.down_count(); }

long long lozenge_weight_exp(const Lozenge& l, const Region& frame, WeightScheme scheme) {
    switch (scheme) {
        case WeightScheme::Unweighted: return 0;
        case WeightScheme::Wt1:
            return l.orient() == LozOrient::Right ? frame.se_line() - l.up.i : 0;
        case WeightScheme::Wt2:
            return l.orient() == LozOrient::Right ? (l.up.j + 1) - frame.base_row() : 0;
        case WeightScheme::Wt3:
            return l.orient() == LozOrient::Left ? (l.up.j + 1) - frame.base_row() : 0;
    }
    return 0;
}

QPoly lozenge_weight(const Lozenge& l, const Region& frame, WeightScheme scheme) {
    return QPoly::monomial(lozenge_weight_exp(l, frame, scheme));
}

std::pair<Region, QPoly> eliminate_forced(const Region& r, WeightScheme scheme) {
    std::map<Cell, int> live;  // cell -> free-neighbor count
    for (const Cell& c : r.cells()) live[c] = 0;
    for (auto& [c, cnt] : live)
        for (const Cell& n : cell_neighbors(c))
            if (live.count(n)) ++cnt;

    std::deque<Cell> queue;
    for (auto& [c, cnt] : live)
        if (cnt <= 1) queue.push_back(c);

    long long wexp = 0;
    auto remove_cell = [&](const Cell& c) {
        live.erase(c);
        for (const Cell& n : cell_neighbors(c)) {
            auto it = live.find(n);
            if (it != live.end() && --it->second <= 1) queue.push_back(n);
        }
    };

    while (!queue.empty()) {
        Cell c = queue.front();
        queue.pop_front();
        auto it = live.find(c);
        if (it == live.end()) continue;
        Cell partner{};
        int free = 0;
        for (const Cell& n : cell_neighbors(c))
            if (live.count(n)) {
                partner = n;
                ++free;
            }
        if (free == 0) {
            // No tiling can cover c.
            return {Region({}, r.base_row(), r.se_line()), QPoly::zero()};
        }
        if (free > 1) continue;  // count changed since queued
        Lozenge l = c.up ? Lozenge{c, partner} : Lozenge{partner, c};
        wexp += lozenge_weight_exp(l, r, scheme);
        remove_cell(c);
        remove_cell(partner);
    }

    std::vector<Cell> kept;
    kept.reserve(live.size());
    for (auto& [c, cnt] : live) kept.push_back(c);
    return {Region(std::move(kept), r.base_row(), r.se_line()), QPoly::monomial(wexp)};
}

SplitCheck split_region(const Region& region, const Region& part) {
    for (const Cell& c : part.cells())
        if (!region.contains(c)) return {false, "part not contained in region"};
    if (!is_balanced(part)) return {false, "balance condition fails: part is unbalanced"};

    // Dual-graph splitting condition: the part cells attached to the rest of
    // the region must all have one orientation. The opposite class of the part
    // then matches internally, and balance forces the whole part to do so.
    bool saw_up = false, saw_down = false;
    for (const Cell& c : part.cells()) {
        for (const Cell& n : cell_neighbors(c)) {
            if (!region.contains(n) || part.contains(n)) continue;
            (c.up ? saw_up : saw_down) = true;
        }
    }
    if (saw_up && saw_down)
        return {false, "separating condition fails: part attaches through both orientations"};
    return {true, ""};
}

DualGraph dual_graph(const Region& r, WeightScheme scheme) {
    DualGraph g;
    g.vertices = r.cells();
    std::map<Cell, int> index;
    for (int k = 0; k < static_cast<int>(g.vertices.size()); ++k) {
        index[g.vertices[k]] = k;
        if (g.vertices[k].up)
            ++g.up_vertices;
        else
            ++g.down_vertices;
    }
    for (const Cell& c : g.vertices) {
        if (!c.up) continue;
        for (const Cell& n : cell_neighbors(c)) {
            auto it = index.find(n);
            if (it == index.end()) continue;
            Lozenge l{c, n};
            g.edges.emplace_back(index.at(c), it->second, lozenge_weight_exp(l, r, scheme));
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Boundary tracing

namespace {

// Oblique direction steps indexed 0..5 at 60 degree increments:
// 0:+e1, 1:+e2, 2:e2-e1, 3:-e1, 4:-e2, 5:e1-e2.
constexpr int kStepI[6] = {1, 0, -1, -1, 0, 1};
constexpr int kStepJ[6] = {0, 1, 1, 0, -1, -1};

struct DirEdge {
    std::pair<int, int> from;
    int dir;
    bool operator<(const DirEdge& o) const {
        return std::tie(from, dir) < std::tie(o.from, o.dir);
    }
};

}  // namespace

std::vector<std::vector<std::pair<int, int>>> boundary_loops(const Region& r) {
    // Directed boundary edges with the region on the left.
    std::map<std::pair<int, int>, std::vector<int>> outgoing;  // vertex -> dirs
    std::map<DirEdge, bool> used;

    auto add_edge = [&](int vi, int vj, int dir) {
        outgoing[{vi, vj}].push_back(dir);
        used[DirEdge{{vi, vj}, dir}] = false;
    };

    for (const Cell& c : r.cells()) {
        if (c.up) {
            if (!r.contains(Cell{c.i, c.j - 1, false})) add_edge(c.i, c.j, 0);
            if (!r.contains(Cell{c.i, c.j, false})) add_edge(c.i + 1, c.j, 2);
            if (!r.contains(Cell{c.i - 1, c.j, false})) add_edge(c.i, c.j + 1, 4);
        } else {
            if (!r.contains(Cell{c.i + 1, c.j, true})) add_edge(c.i + 1, c.j, 1);
            if (!r.contains(Cell{c.i, c.j + 1, true})) add_edge(c.i + 1, c.j + 1, 3);
            if (!r.contains(Cell{c.i, c.j, true})) add_edge(c.i, c.j + 1, 5);
        }
    }

    std::vector<std::vector<std::pair<int, int>>> loops;
    for (auto& [edge, consumed] : used) {
        if (consumed) continue;
        std::vector<std::pair<int, int>> loop;
        DirEdge cur = edge;
        while (!used.at(cur)) {
            used.at(cur) = true;
            loop.push_back(cur.from);
            std::pair<int, int> next{cur.from.first + kStepI[cur.dir],
                                     cur.from.second + kStepJ[cur.dir]};
            // Keep the region on the left: take the sharpest available turn.
            const auto& outs = outgoing.at(next);
            int best = -1, best_delta = 7;
            for (int d : outs) {
                if (used.at(DirEdge{next, d})) continue;
                int delta = ((d - (cur.dir + 3)) % 6 + 6) % 6;
                if (delta == 0) delta = 6;
                if (delta < best_delta) {
                    best_delta = delta;
                    best = d;
                }
            }
            if (best < 0) break;  // loop closed
            cur = DirEdge{next, best};
        }
        loops.push_back(std::move(loop));
    }
    return loops;
}

bool on_boundary_in_cyclic_order(const Region& r, const std::vector<Cell>& cells) {
    auto loops = boundary_loops(r);
    if (loops.empty()) return false;
    // Use the longest loop as the outer face walk.
    const auto* walk = &loops.front();
    for (const auto& l : loops)
        if (l.size() > walk->size()) walk = &l;
    const long long L = static_cast<long long>(walk->size());

    std::map<std::pair<int, int>, std::vector<long long>> at;
    for (long long k = 0; k < L; ++k) (*at.try_emplace(walk->at(k)).first).second.push_back(k);

    std::vector<std::vector<long long>> touches;
    for (const Cell& c : cells) {
        std::vector<long long> t;
        std::vector<std::pair<int, int>> corners;
        if (c.up)
            corners = {{c.i, c.j}, {c.i + 1, c.j}, {c.i, c.j + 1}};
        else
            corners = {{c.i + 1, c.j}, {c.i, c.j + 1}, {c.i + 1, c.j + 1}};
        for (auto& v : corners) {
            auto it = at.find(v);
            if (it != at.end()) t.insert(t.end(), it->second.begin(), it->second.end());
        }
        if (t.empty()) return false;  // cell never touches the outer boundary
        touches.push_back(std::move(t));
    }

    // Accept if some choice of touch points reads cyclically in either direction.
    std::vector<long long> pick(touches.size());
    auto cyclic_ok = [&]() {
        long long base = pick[0];
        std::vector<long long> rel;
        for (std::size_t k = 1; k < pick.size(); ++k)
            rel.push_back(((pick[k] - base) % L + L) % L);
        bool asc = true, desc = true;
        for (std::size_t k = 0; k < rel.size(); ++k) {
            if (rel[k] == 0) return false;
            if (k > 0 && rel[k] <= rel[k - 1]) asc = false;
            if (k > 0 && rel[k] >= rel[k - 1]) desc = false;
        }
        return asc || desc;
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        if (k == touches.size()) return cyclic_ok();
        for (long long t : touches[k]) {
            pick[k] = t;
            if (rec(k + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

}  // namespace qloz
