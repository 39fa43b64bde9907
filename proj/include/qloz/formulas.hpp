#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qloz/qproduct.hpp"

namespace qloz {

/// Closed-form evaluators. Each returns a canonical QProduct carrying its
/// q-power prefactor where one applies; integer-valued results are exact.

QProduct f_macmahon_q(long long a, long long b, long long c);

/// Plain count of lozenge tilings of the three-bowtie hexagon, computed with
/// integer hyperfactorials.
BigInt f_main_count(long long x, long long y, long long z, long long a, long long b,
                    long long c, long long d, long long e, long long f);

/// Volume generating function of the generalized plane partitions attached to
/// the three-bowtie hexagon.
QProduct f_main_q(long long x, long long y, long long z, long long a, long long b, long long c,
                  long long d, long long e, long long f);

QProduct f_hex_wt1(long long a, long long b, long long c);
QProduct f_hex_wt2(long long a, long long b, long long c);

QProduct f_k_wt2(long long a, long long x, long long y, long long z, long long t);

QProduct f_q_wt2(long long a, long long b, long long x, long long y, long long z, long long t);
QProduct f_q_wt3(long long a, long long b, long long x, long long y, long long z, long long t);

QProduct f_b_wt2(long long x, long long y, long long z, long long t, long long a, long long b,
                 long long c, long long d);

/// Count of box plane partitions constrained along three sides.
BigInt f_corollary_pp(long long a, long long b, long long c, long long x, long long y,
                      long long z);

/// Formula identifiers exposed on the command line.
enum class FormulaId {
    MacMahonQ,
    MainCount,
    MainQ,
    HexWt1,
    HexWt2,
    KWt2,
    QWt2,
    QWt3,
    BWt2,
    ExpG,
    ExpH,
    ExpE,
    ExpA,
    CorollaryPP,
};

std::optional<FormulaId> formula_id_from_string(const std::string& s);
std::string to_string(FormulaId id);
std::vector<std::string> formula_id_names();

}  // namespace qloz
