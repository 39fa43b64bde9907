#pragma once

#include "qloz/lattice.hpp"
#include "qloz/qpoly.hpp"

namespace qloz {

/// Number of plane partitions with `rows` rows and `cols` columns and entries
/// at most `maxent`, by brute-force generation. Throws BoxTooLargeError when
/// rows*cols*maxent exceeds `limit`.
BigInt pp_count_box(long long rows, long long cols, long long maxent, long long limit = 30);

/// Volume generating polynomial over the same box, brute force.
QPoly pp_volume_poly(long long rows, long long cols, long long maxent, long long limit = 30);

/// Count of plane partitions in the (z+x+a+b) x (x+y+b+c) box with entries at
/// most y+z+c+a, subject to the three side constraints: the first z+b entries
/// of columns 1..c equal the maximum and the rest of those columns stay at
/// most y+z+a; the last a entries of rows 1..b equal y+a; the last y+b
/// entries of rows z+x+b+1..z+x+b+a are 0 and the rest of those rows are at
/// least a.
BigInt constrained_pp_count(long long a, long long b, long long c, long long x, long long y,
                            long long z, long long cell_limit = 4000000);

/// Volume generating function of the generalized piles attached to an F
/// region, recovered from the weighted tiling polynomial: tiling_polynomial(F,
/// Wt2) / q^h, cross-checked against the Wt1 route / q^g. Throws
/// DivisionFailureError if either monomial division fails and logic_error if
/// the two routes disagree.
QPoly gpp_volume_poly(const RegionSpec& f_spec);

}  // namespace qloz
