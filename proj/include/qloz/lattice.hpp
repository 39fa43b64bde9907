#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "qloz/qpoly.hpp"

namespace qloz {

/// Unit triangle at oblique coordinates (i, j). Row j counts lattice rows up
/// from the bounding hexagon's bottom side. Up(i,j) has corners (i,j), (i+1,j),
/// (i,j+1); Down(i,j) has corners (i+1,j), (i,j+1), (i+1,j+1). Up(i,j) and
/// Down(i,j) tile the oblique unit parallelogram at (i,j).
struct Cell {
    int i = 0;
    int j = 0;
    bool up = true;

    friend auto operator<=>(const Cell& a, const Cell& b) = default;
};

/// Scan order: by row, then column, up-cell before its right-pair down-cell.
struct ScanLess {
    bool operator()(const Cell& a, const Cell& b) const {
        if (a.j != b.j) return a.j < b.j;
        if (a.i != b.i) return a.i < b.i;
        return a.up && !b.up;
    }
};

enum class LozOrient { Left, Right, Vertical };

/// Pair of adjacent cells, one up one down.
struct Lozenge {
    Cell up;    // the up-pointing cell
    Cell down;  // the down-pointing cell

    LozOrient orient() const;

    friend auto operator<=>(const Lozenge&, const Lozenge&) = default;
};

enum class WeightScheme { Unweighted, Wt1, Wt2, Wt3 };

std::string to_string(WeightScheme s);
std::optional<WeightScheme> weight_scheme_from_string(const std::string& s);

/// Finite set of unit triangles plus the frame of its bounding hexagon:
/// base_row is the row of the hexagon's bottom side, se_line the oblique
/// lattice line carrying its southeast side. The frame anchors the positional
/// weight assignments and survives cell deletions.
class Region {
public:
    Region() = default;
    Region(std::vector<Cell> cells, int base_row, int se_line);

    const std::vector<Cell>& cells() const { return cells_; }
    int base_row() const { return base_row_; }
    int se_line() const { return se_line_; }

    bool empty() const { return cells_.empty(); }
    std::size_t size() const { return cells_.size(); }
    bool contains(const Cell& c) const;

    std::size_t up_count() const;
    std::size_t down_count() const;

    /// Neighbours of c (sharing a full lattice edge) that lie inside the region.
    std::vector<Cell> neighbors_in(const Cell& c) const;

    Region without(const std::vector<Cell>& removed) const;
    Region with_added(const std::vector<Cell>& added) const;

    std::uint64_t hash() const;

    bool operator==(const Region& o) const = default;

private:
    std::vector<Cell> cells_;  // sorted in scan order, unique
    int base_row_ = 0;
    int se_line_ = 0;
};

/// The three neighbour candidates of a cell (not filtered by any region).
std::array<Cell, 3> cell_neighbors(const Cell& c);

/// Tagged parameter record for the five region families.
struct RegionSpec {
    enum class Family { Hex, K, Q, B, F };

    Family family = Family::Hex;
    std::vector<long long> params;  // canonical order, see param_names()

    static RegionSpec hex(long long a, long long b, long long c);
    static RegionSpec k(long long a, long long x, long long y, long long z, long long t);
    static RegionSpec q(long long a, long long b, long long x, long long y, long long z, long long t);
    static RegionSpec b(long long x, long long y, long long z, long long t,
                        long long a, long long b, long long c, long long d);
    static RegionSpec f(long long x, long long y, long long z,
                        long long a, long long b, long long c,
                        long long d, long long e, long long f);

    static const std::vector<std::string>& param_names(Family f);
    static std::string family_name(Family f);
    long long param(const std::string& name) const;

    std::string to_string() const;

    bool operator==(const RegionSpec&) const = default;
};

/// Cells of the hexagon with side lengths (nw, n, ne, se, s, sw) read clockwise
/// from the northwest side, bottom-left corner of the south side at (0, 0).
/// Requires the closure conditions n + ne = s + sw and nw + sw = ne + se.
std::vector<Cell> hexagon_cells(long long nw, long long n, long long ne,
                                long long se, long long s, long long sw);

/// Up-pointing triangle with corners (p, q), (p+n, q), (p, q+n).
std::vector<Cell> up_triangle_cells(long long p, long long q, long long n);

/// Down-pointing triangle with top edge from (p, q) to (p+n, q) and apex (p+n, q-n).
std::vector<Cell> down_triangle_cells(long long p, long long q, long long n);

/// Bounding hexagon side lengths (nw, n, ne, se, s, sw) and the dent cells
/// removed from it; the single source of the family geometry.
struct RegionGeometry {
    std::array<long long, 6> sides{};
    std::vector<Cell> dent_cells;
};

RegionGeometry region_geometry(const RegionSpec& spec);

/// Construct the named region. All dent positions are fixed by the geometry
/// table in region_geometry and pinned by the calibration suite.
Region build_region(const RegionSpec& spec);

bool is_balanced(const Region& r);

/// Weight exponent of a lozenge under a scheme, relative to the region frame:
/// Wt1 weighs right lozenges by the line distance from their left side to the
/// southeast side; Wt2 weighs right lozenges by the row distance from their top
/// edge to the base; Wt3 does the same for left lozenges. Everything else is 1.
long long lozenge_weight_exp(const Lozenge& l, const Region& frame, WeightScheme scheme);

QPoly lozenge_weight(const Lozenge& l, const Region& frame, WeightScheme scheme);

/// Repeatedly removes lozenges forced by cells with a unique free neighbour.
/// Returns the reduced region (same frame) and the product of the forced
/// lozenges' weights; a cell with no free neighbour yields the zero polynomial
/// and an empty region marker.
std::pair<Region, QPoly> eliminate_forced(const Region& r, WeightScheme scheme);

struct SplitCheck {
    bool valid = false;
    std::string reason;  // which condition failed
};

/// Region-splitting test: part must be balanced and each border side between
/// part and region-part may carry only one triangle orientation.
SplitCheck split_region(const Region& region, const Region& part);

struct DualGraph {
    std::vector<Cell> vertices;                              // scan order; ups then downs? no: scan order
    std::vector<std::tuple<int, int, long long>> edges;      // (u index, v index, weight exponent)
    std::size_t up_vertices = 0;
    std::size_t down_vertices = 0;
};

/// Bipartite planar dual: one vertex per cell, one edge per interior lattice
/// edge, weighted by lozenge_weight.
DualGraph dual_graph(const Region& r, WeightScheme scheme);

/// Closed boundary loops as vertex sequences (oblique lattice points), traced
/// with the region on the left. A connected region with boundary-touching
/// dents yields a single loop through any pinch points.
std::vector<std::vector<std::pair<int, int>>> boundary_loops(const Region& r);

/// True when the cells can be read in the given cyclic order (either
/// direction) along the region's outer boundary; cells touching the boundary
/// only at a vertex count as on it.
bool on_boundary_in_cyclic_order(const Region& r, const std::vector<Cell>& cells);

}  // namespace qloz
