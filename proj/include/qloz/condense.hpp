#pragma once

#include <vector>

#include "qloz/enumerate.hpp"
#include "qloz/lattice.hpp"

namespace qloz {

enum class KuoVariant { Balanced4, Unbalanced31 };

/// Four boundary cells on a common face of the dual graph, in cyclic order.
/// Balanced4: u, w up and v, s down with |V1| = |V2|. Unbalanced31: u, v, w up
/// and s down with |V1| = |V2| + 1.
struct CondensationInstance {
    Region region;
    WeightScheme scheme = WeightScheme::Unweighted;
    Cell u, v, w, s;
    KuoVariant variant = KuoVariant::Balanced4;
};

struct KuoResult {
    bool holds = false;
    QPoly lhs, rhs;
};

/// Checks M(G) M(G-{u,v,w,s}) = M(G-{u,v}) M(G-{w,s}) + M(G-{u,s}) M(G-{v,w})
/// by enumerating all six generating polynomials. Throws InvalidPlacementError
/// when the cells are not four distinct boundary cells of the right parities
/// in cyclic order.
KuoResult verify_kuo4(const CondensationInstance& inst);

/// Checks M(G-{v}) M(G-{u,w,s}) = M(G-{u}) M(G-{v,w,s}) + M(G-{w}) M(G-{u,v,s})
/// on a one-extra-up-cell region.
KuoResult verify_kuo31(const CondensationInstance& inst);

/// The region used in the Q induction: the northeast dent's bottom row of
/// 2b-1 cells is filled back in, leaving a (b-1)-dent; requires b >= 1.
Region q_band_region(long long a, long long b, long long x, long long y, long long z,
                     long long t);

/// The Unbalanced31 instance on the band-augmented Q region with the four
/// cells placed at the bottom-right corner, the band's left end, and the two
/// ends of the top row.
CondensationInstance make_kuo31_q_instance(long long a, long long b, long long x, long long y,
                                           long long z, long long t);

/// Deterministic Balanced4 instances over small hexagons and dented hexagons,
/// cells read off the boundary walk.
std::vector<CondensationInstance> generate_kuo4_instances(std::size_t count);

enum class RecurrenceFamily { Q, B, F };

struct RecurrenceResult {
    bool holds = false;
    QPoly lhs, rhs;
};

/// Verifies the family's condensation recurrence with enumerated wt2
/// generating polynomials. Q takes (a,b,x,y,z,t) with b,t,y >= 1 and carries
/// q^{y+z+t+a+b} on its second term; B takes (x,y,z,t,a,b,c,d) with z,t >= 1;
/// F takes (x,y,z,a,b,c,d,e,f) with y,z >= 1.
RecurrenceResult verify_recurrence(RecurrenceFamily family,
                                   const std::vector<long long>& params);

}  // namespace qloz
