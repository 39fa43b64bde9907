#include <doctest.h>

#include "qloz/condense.hpp"
#include "qloz/errors.hpp"

using namespace qloz;

namespace {

QPoly m2(const RegionSpec& spec) {
    return tiling_polynomial(build_region(spec), WeightScheme::Wt2).value;
}

}  // namespace

TEST_CASE("kuo4 holds on the unit hexagon, unweighted and weighted") {
    Region h = build_region(RegionSpec::hex(1, 1, 1));
    CondensationInstance inst;
    inst.region = h;
    inst.u = Cell{0, 0, true};
    inst.v = Cell{0, 0, false};
    inst.w = Cell{-1, 1, true};
    inst.s = Cell{-1, 0, false};
    inst.variant = KuoVariant::Balanced4;
    for (auto s : {WeightScheme::Unweighted, WeightScheme::Wt1, WeightScheme::Wt2}) {
        inst.scheme = s;
        auto res = verify_kuo4(inst);
        CHECK(res.holds);
    }
}

TEST_CASE("kuo4 holds on Hex(2,2,2) with an outer-face placement") {
    Region h = build_region(RegionSpec::hex(2, 2, 2));
    CondensationInstance inst;
    inst.region = h;
    inst.scheme = WeightScheme::Wt2;
    inst.u = Cell{0, 0, true};   // south side
    inst.v = Cell{1, 0, false};  // southeast
    inst.w = Cell{-1, 3, true};  // north side
    inst.s = Cell{-2, 2, false};  // west
    inst.variant = KuoVariant::Balanced4;
    auto res = verify_kuo4(inst);
    CHECK(res.holds);
}

TEST_CASE("kuo4 rejects degenerate placements") {
    Region h = build_region(RegionSpec::hex(1, 1, 1));
    CondensationInstance inst;
    inst.region = h;
    inst.variant = KuoVariant::Balanced4;
    inst.u = inst.w = Cell{0, 0, true};
    inst.v = Cell{0, 0, false};
    inst.s = Cell{-1, 0, false};
    CHECK_THROWS_AS(verify_kuo4(inst), InvalidPlacementError);

    // Wrong parity.
    inst.u = Cell{0, 0, true};
    inst.v = Cell{-1, 1, true};
    inst.w = Cell{0, 1, true};
    inst.s = Cell{-1, 0, false};
    CHECK_THROWS_AS(verify_kuo4(inst), InvalidPlacementError);

    // Out of cyclic order.
    inst.u = Cell{0, 0, true};
    inst.v = Cell{-1, 1, false};
    inst.w = Cell{-1, 1, true};
    inst.s = Cell{0, 0, false};
    CHECK_THROWS_AS(verify_kuo4(inst), InvalidPlacementError);
}

TEST_CASE("generated kuo4 instances all hold") {
    auto instances = generate_kuo4_instances(30);
    REQUIRE(instances.size() == 30);
    for (const auto& inst : instances) {
        auto res = verify_kuo4(inst);
        CHECK(res.holds);
    }
}

TEST_CASE("band-augmented Q region") {
    Region band = q_band_region(1, 1, 1, 1, 1, 1);
    Region q = build_region(RegionSpec::q(1, 1, 1, 1, 1, 1));
    CHECK(band.size() == q.size() + 1);  // 2b-1 = 1
    CHECK(band.up_count() == band.down_count() + 1);
    CHECK_THROWS_AS(q_band_region(1, 0, 1, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("kuo31 on the Q-proof instance") {
    for (auto p : {std::array<long long, 6>{1, 1, 1, 1, 1, 1},
                   std::array<long long, 6>{1, 2, 1, 1, 1, 2},
                   std::array<long long, 6>{2, 1, 1, 2, 0, 1},
                   std::array<long long, 6>{1, 2, 2, 1, 1, 1}}) {
        auto inst = make_kuo31_q_instance(p[0], p[1], p[2], p[3], p[4], p[5]);
        auto res = verify_kuo31(inst);
        CHECK_MESSAGE(res.holds, "a=", p[0], " b=", p[1], " x=", p[2], " y=", p[3], " z=",
                      p[4], " t=", p[5]);
    }
}

TEST_CASE("kuo31 single-cell deletions reproduce the dented-region reductions") {
    const long long a = 1, b = 2, x = 1, y = 1, z = 1, t = 2;
    auto inst = make_kuo31_q_instance(a, b, x, y, z, t);
    const Region& g = inst.region;
    auto m = [&](std::vector<Cell> dels) {
        return tiling_polynomial(g.without(dels), WeightScheme::Wt2).value;
    };
    const long long rows = y + z + t + a + b;

    CHECK(m({inst.v}) == m2(RegionSpec::q(a, b, x, y, z, t)));
    CHECK(m({inst.u}) == m2(RegionSpec::q(a, b - 1, x, y, z + 1, t)));
    CHECK(m({inst.w}) ==
          m2(RegionSpec::q(a, b - 1, x, y + 1, z, t - 1)).shifted((x + y) * rows));
    CHECK(m({inst.u, inst.w, inst.s}) ==
          m2(RegionSpec::q(a, b - 1, x, y, z + 1, t - 1)).shifted((x + y - 1) * rows));
    CHECK(m({inst.v, inst.w, inst.s}) ==
          m2(RegionSpec::q(a, b, x, y, z, t - 1)).shifted((x + y - 1) * rows));
    CHECK(m({inst.u, inst.v, inst.s}) == m2(RegionSpec::q(a, b, x, y - 1, z + 1, t)));
}

TEST_CASE("kuo31 tolerates untileable reduced regions") {
    // Degenerate parameters where some reduced region has no tilings: the
    // identity holds with zero polynomials participating.
    auto inst = make_kuo31_q_instance(1, 1, 0, 1, 0, 1);
    auto res = verify_kuo31(inst);
    CHECK(res.holds);
}

TEST_CASE("condensation recurrences hold for enumerated polynomials") {
    CHECK(verify_recurrence(RecurrenceFamily::Q, {1, 1, 1, 1, 1, 1}).holds);
    CHECK(verify_recurrence(RecurrenceFamily::B, {1, 1, 1, 1, 1, 1, 1, 1}).holds);
    CHECK(verify_recurrence(RecurrenceFamily::F, {1, 1, 1, 1, 1, 1, 0, 0, 0}).holds);
    CHECK_THROWS_AS(verify_recurrence(RecurrenceFamily::Q, {1, 0, 1, 1, 1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_recurrence(RecurrenceFamily::F, {1, 0, 1, 1, 1, 1, 0, 0, 0}),
                    std::invalid_argument);
}
