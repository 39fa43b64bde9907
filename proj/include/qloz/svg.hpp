#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qloz/lattice.hpp"

namespace qloz {

/// Deterministic SVG drawing of a region: bounding hexagon with dents shaded,
/// region boundary outlined, and optionally a tiling with the three lozenge
/// orientations in three fills.
std::string render_region_svg(const RegionSpec& spec,
                              const std::optional<std::vector<Lozenge>>& tiling);

}  // namespace qloz
