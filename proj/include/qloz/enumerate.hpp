#pragma once

#include <cstdint>
#include <vector>

#include "qloz/lattice.hpp"
#include "qloz/qpoly.hpp"

namespace qloz {

struct TilingPolynomial {
    QPoly value;
    std::uint64_t region_hash = 0;
    WeightScheme scheme = WeightScheme::Unweighted;
};

/// Exact weighted tiling generating polynomial by profile dynamic programming
/// over the row-major scan order. The zero polynomial means untileable; the
/// empty region contributes the single empty tiling. Throws
/// FrontierTooWideError when the profile window exceeds 62 cells.
TilingPolynomial tiling_polynomial(const Region& r, WeightScheme scheme);

/// Same contract computed by plain recursive branching on the first uncovered
/// cell; the independent oracle. Throws RegionTooLargeError above max_cells.
TilingPolynomial tiling_polynomial_naive(const Region& r, WeightScheme scheme,
                                         std::size_t max_cells = 60);

/// Number of lozenge tilings (the unweighted polynomial's constant).
BigInt count_tilings(const Region& r);

/// All tilings as lozenge lists in deterministic first-found order, at most
/// `limit` of them. Intended for small regions (tests, rendering).
std::vector<std::vector<Lozenge>> enumerate_tilings(const Region& r, std::size_t limit);

}  // namespace qloz
