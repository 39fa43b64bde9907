#include "qloz/condense.hpp"

#include <stdexcept>

#include "qloz/errors.hpp"

namespace qloz {

namespace {

QPoly m_of(const Region& r, WeightScheme s, const std::vector<Cell>& deleted) {
    return tiling_polynomial(r.without(deleted), s).value;
}

void require_placement(const CondensationInstance& inst, bool need_up_v) {
    const auto cells = std::vector<Cell>{inst.u, inst.v, inst.w, inst.s};
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j)
            if (cells[i] == cells[j])
                throw InvalidPlacementError("condensation cells must be distinct");
    for (const Cell& c : cells)
        if (!inst.region.contains(c))
            throw InvalidPlacementError("condensation cell outside the region");
    if (!inst.u.up || !inst.w.up || inst.s.up)
        throw InvalidPlacementError("u, w must be up cells and s a down cell");
    if (inst.v.up != need_up_v)
        throw InvalidPlacementError(need_up_v ? "v must be an up cell"
                                              : "v must be a down cell");
    if (!on_boundary_in_cyclic_order(inst.region, cells))
        throw InvalidPlacementError("cells are not in cyclic order on the outer face");
}

}  // namespace

KuoResult verify_kuo4(const CondensationInstance& inst) {
    if (inst.variant != KuoVariant::Balanced4)
        throw InvalidPlacementError("verify_kuo4 expects a Balanced4 instance");
    require_placement(inst, /*need_up_v=*/false);
    if (inst.region.up_count() != inst.region.down_count())
        throw InvalidPlacementError("Balanced4 requires |V1| = |V2|");

    const Region& g = inst.region;
    WeightScheme ws = inst.scheme;
    QPoly lhs = m_of(g, ws, {}) * m_of(g, ws, {inst.u, inst.v, inst.w, inst.s});
    QPoly rhs = m_of(g, ws, {inst.u, inst.v}) * m_of(g, ws, {inst.w, inst.s}) +
                m_of(g, ws, {inst.u, inst.s}) * m_of(g, ws, {inst.v, inst.w});
    return {lhs == rhs, lhs, rhs};
}

KuoResult verify_kuo31(const CondensationInstance& inst) {
    if (inst.variant != KuoVariant::Unbalanced31)
        throw InvalidPlacementError("verify_kuo31 expects an Unbalanced31 instance");
    require_placement(inst, /*need_up_v=*/true);
    if (inst.region.up_count() != inst.region.down_count() + 1)
        throw InvalidPlacementError("Unbalanced31 requires |V1| = |V2| + 1");

    const Region& g = inst.region;
    WeightScheme ws = inst.scheme;
    QPoly lhs = m_of(g, ws, {inst.v}) * m_of(g, ws, {inst.u, inst.w, inst.s});
    QPoly rhs = m_of(g, ws, {inst.u}) * m_of(g, ws, {inst.v, inst.w, inst.s}) +
                m_of(g, ws, {inst.w}) * m_of(g, ws, {inst.u, inst.v, inst.s});
    return {lhs == rhs, lhs, rhs};
}

Region q_band_region(long long a, long long b, long long x, long long y, long long z,
                     long long t) {
    if (b < 1) throw std::invalid_argument("band region needs b >= 1");
    Region q = build_region(RegionSpec::q(a, b, x, y, z, t));
    std::vector<Cell> band;
    const int r = static_cast<int>(y + z + a);
    for (long long i = x; i < x + b; ++i)
        band.push_back(Cell{static_cast<int>(i), r, true});
    for (long long i = x; i < x + b - 1; ++i)
        band.push_back(Cell{static_cast<int>(i), r, false});
    return q.with_added(band);
}

CondensationInstance make_kuo31_q_instance(long long a, long long b, long long x, long long y,
                                           long long z, long long t) {
    CondensationInstance inst;
    inst.region = q_band_region(a, b, x, y, z, t);
    inst.scheme = WeightScheme::Wt2;
    inst.variant = KuoVariant::Unbalanced31;
    const int top = static_cast<int>(y + z + t + a + b) - 1;
    inst.u = Cell{static_cast<int>(x + y + a + b) - 1, 0, true};
    inst.v = Cell{static_cast<int>(x), static_cast<int>(y + z + a), true};
    inst.w = Cell{static_cast<int>(x - t), top, true};
    inst.s = Cell{static_cast<int>(-(y + t)), top, false};
    return inst;
}

std::vector<CondensationInstance> generate_kuo4_instances(std::size_t count) {
    std::vector<RegionSpec> specs = {
        RegionSpec::hex(1, 1, 1),  RegionSpec::hex(2, 2, 2),  RegionSpec::hex(2, 1, 2),
        RegionSpec::hex(1, 3, 2),  RegionSpec::hex(3, 2, 1),  RegionSpec::k(1, 1, 1, 1, 1),
        RegionSpec::k(2, 1, 1, 1, 1), RegionSpec::k(1, 2, 1, 2, 1),
        RegionSpec::k(1, 1, 2, 1, 2), RegionSpec::q(1, 1, 1, 1, 1, 1),
        RegionSpec::q(1, 1, 2, 1, 1, 1), RegionSpec::q(2, 1, 1, 1, 1, 1),
        RegionSpec::q(1, 2, 1, 1, 1, 1), RegionSpec::q(1, 1, 1, 1, 2, 1),
        RegionSpec::q(1, 1, 1, 2, 1, 1)};

    std::vector<CondensationInstance> out;
    std::size_t offset = 0;
    while (out.size() < count) {
        for (const auto& spec : specs) {
            if (out.size() >= count) break;
            Region r = build_region(spec);
            auto loops = boundary_loops(r);
            if (loops.empty()) continue;
            const auto* walk = &loops.front();
            for (const auto& l : loops)
                if (l.size() > walk->size()) walk = &l;

            // Cells owning the boundary edges, in walk order.
            std::vector<Cell> border;
            for (std::size_t k = 0; k < walk->size(); ++k) {
                auto [vi, vj] = walk->at(k);
                auto [wi, wj] = walk->at((k + 1) % walk->size());
                int di = wi - vi, dj = wj - vj;
                Cell owner;
                if (dj == 0)
                    owner = di == 1 ? Cell{vi, vj, true} : Cell{wi, wj - 1, false};
                else if (di == 0)
                    owner = dj == 1 ? Cell{vi - 1, vj, false} : Cell{wi, wj, true};
                else
                    owner = di == -1 ? Cell{wi, vj, true} : Cell{vi, wj, false};
                if (r.contains(owner) && (border.empty() || !(border.back() == owner)))
                    border.push_back(owner);
            }
            if (border.size() < 8) continue;

            // Pick alternating parities starting from a rotated position.
            auto find_next = [&](std::size_t from, bool up,
                                 const std::vector<Cell>& taken) -> std::optional<std::size_t> {
                for (std::size_t step = 0; step < border.size(); ++step) {
                    std::size_t k = (from + step) % border.size();
                    const Cell& c = border[k];
                    if (c.up != up) continue;
                    bool dup = false;
                    for (const Cell& tkn : taken)
                        if (tkn == c) dup = true;
                    if (!dup) return k;
                }
                return std::nullopt;
            };
            std::size_t start = (offset * 7) % border.size();
            std::vector<Cell> picked;
            bool ok = true;
            bool want_up = true;
            std::size_t pos = start;
            for (int k = 0; k < 4 && ok; ++k) {
                auto found = find_next(pos, want_up, picked);
                if (!found) {
                    ok = false;
                    break;
                }
                picked.push_back(border[*found]);
                pos = (*found + 1) % border.size();
                want_up = !want_up;
            }
            ++offset;
            if (!ok) continue;

            CondensationInstance inst;
            inst.region = r;
            inst.scheme = (out.size() % 2 == 0) ? WeightScheme::Unweighted : WeightScheme::Wt2;
            inst.u = picked[0];
            inst.v = picked[1];
            inst.w = picked[2];
            inst.s = picked[3];
            inst.variant = KuoVariant::Balanced4;
            out.push_back(std::move(inst));
        }
    }
    return out;
}

RecurrenceResult verify_recurrence(RecurrenceFamily family,
                                   const std::vector<long long>& p) {
    auto m2 = [](const RegionSpec& spec) {
        return tiling_polynomial(build_region(spec), WeightScheme::Wt2).value;
    };
    switch (family) {
        case RecurrenceFamily::Q: {
            if (p.size() != 6) throw std::invalid_argument("Q recurrence expects (a,b,x,y,z,t)");
            long long a = p[0], b = p[1], x = p[2], y = p[3], z = p[4], t = p[5];
            if (b < 1 || t < 1 || y < 1)
                throw std::invalid_argument("Q recurrence needs b, t, y >= 1");
            QPoly lhs = m2(RegionSpec::q(a, b, x, y, z, t)) *
                        m2(RegionSpec::q(a, b - 1, x, y, z + 1, t - 1));
            QPoly rhs = m2(RegionSpec::q(a, b - 1, x, y, z + 1, t)) *
                            m2(RegionSpec::q(a, b, x, y, z, t - 1)) +
                        (m2(RegionSpec::q(a, b - 1, x, y + 1, z, t - 1)) *
                         m2(RegionSpec::q(a, b, x, y - 1, z + 1, t)))
                            .shifted(y + z + t + a + b);
            return {lhs == rhs, lhs, rhs};
        }
        case RecurrenceFamily::B: {
            if (p.size() != 8)
                throw std::invalid_argument("B recurrence expects (x,y,z,t,a,b,c,d)");
            long long x = p[0], y = p[1], z = p[2], t = p[3], a = p[4], b = p[5], c = p[6],
                      d = p[7];
            if (z < 1 || t < 1) throw std::invalid_argument("B recurrence needs z, t >= 1");
            QPoly lhs = m2(RegionSpec::b(x, y, z, t, a, b, c, d)) *
                        m2(RegionSpec::b(x, y, z - 1, t - 1, a, b, c + 1, d + 1));
            QPoly rhs = m2(RegionSpec::b(x, y, z - 1, t, a, b, c, d + 1)) *
                            m2(RegionSpec::b(x, y, z, t - 1, a, b, c + 1, d)) +
                        m2(RegionSpec::b(x, y, z - 1, t, a, b, c + 1, d)) *
                            m2(RegionSpec::b(x, y, z, t - 1, a, b, c, d + 1));
            return {lhs == rhs, lhs, rhs};
        }
        case RecurrenceFamily::F: {
            if (p.size() != 9)
                throw std::invalid_argument("F recurrence expects (x,y,z,a,b,c,d,e,f)");
            long long x = p[0], y = p[1], z = p[2], a = p[3], b = p[4], c = p[5], d = p[6],
                      e = p[7], f = p[8];
            if (y < 1 || z < 1) throw std::invalid_argument("F recurrence needs y, z >= 1");
            QPoly lhs = m2(RegionSpec::f(x, y, z, a, b, c, d, e, f)) *
                        m2(RegionSpec::f(x + 1, y - 1, z - 1, a, b, c, d, e + 1, f));
            QPoly rhs = m2(RegionSpec::f(x + 1, y, z - 1, a, b, c, d, e, f)) *
                            m2(RegionSpec::f(x, y - 1, z, a, b, c, d, e + 1, f)) +
                        m2(RegionSpec::f(x + 1, y - 1, z, a, b, c, d, e, f)) *
                            m2(RegionSpec::f(x, y, z - 1, a, b, c, d, e + 1, f));
            return {lhs == rhs, lhs, rhs};
        }
    }
    throw std::logic_error("bad recurrence family");
}

}  // namespace qloz
