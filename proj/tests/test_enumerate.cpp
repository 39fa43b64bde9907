#include <doctest.h>

#include "qloz/enumerate.hpp"
#include "qloz/formulas.hpp"
#include "qloz/lattice.hpp"

using namespace qloz;

TEST_CASE("unit hexagon counts and weights") {
    Region h = build_region(RegionSpec::hex(1, 1, 1));
    CHECK(count_tilings(h) == 2);

    QPoly expect;
    expect.add_term(1, 1);
    expect.add_term(2, 1);
    CHECK(tiling_polynomial(h, WeightScheme::Wt2).value == expect);
    CHECK(tiling_polynomial_naive(h, WeightScheme::Wt2).value == expect);
}

TEST_CASE("small hexagon counts") {
    CHECK(count_tilings(build_region(RegionSpec::hex(1, 2, 1))) == 3);
    CHECK(count_tilings(build_region(RegionSpec::hex(2, 2, 2))) == 20);
    CHECK(tiling_polynomial_naive(build_region(RegionSpec::hex(2, 2, 2)),
                                  WeightScheme::Unweighted)
              .value.coeff(0) == 20);
}

TEST_CASE("empty and untileable regions") {
    Region empty({}, 0, 0);
    CHECK(tiling_polynomial(empty, WeightScheme::Wt1).value == QPoly::one());
    CHECK(tiling_polynomial_naive(empty, WeightScheme::Wt1).value == QPoly::one());

    Region single({Cell{0, 0, true}}, 0, 1);
    CHECK(tiling_polynomial(single, WeightScheme::Unweighted).value.is_zero());
    CHECK(tiling_polynomial_naive(single, WeightScheme::Unweighted).value.is_zero());
}

TEST_CASE("naive oracle rejects oversized regions") {
    Region big = build_region(RegionSpec::hex(4, 4, 4));
    CHECK_THROWS_AS(tiling_polynomial_naive(big, WeightScheme::Unweighted, 60),
                    RegionTooLargeError);
}

TEST_CASE("dp agrees with naive on all families at small parameters") {
    std::vector<RegionSpec> specs;
    for (long long a = 0; a <= 2; ++a)
        for (long long b = 0; b <= 2; ++b)
            for (long long c = 0; c <= 2; ++c) specs.push_back(RegionSpec::hex(a, b, c));
    for (long long a = 0; a <= 1; ++a)
        for (long long x = 0; x <= 1; ++x)
            for (long long y = 0; y <= 1; ++y)
                for (long long z = 0; z <= 1; ++z)
                    for (long long t = 0; t <= 1; ++t) {
                        specs.push_back(RegionSpec::k(a + 1, x, y, z, t));
                        specs.push_back(RegionSpec::q(a, 1, x, y, z + 1, t));
                    }
    specs.push_back(RegionSpec::b(1, 1, 1, 1, 1, 1, 1, 1));
    specs.push_back(RegionSpec::f(1, 1, 1, 1, 1, 1, 1, 1, 1));
    specs.push_back(RegionSpec::f(1, 0, 1, 1, 0, 0, 0, 0, 0));

    for (const auto& spec : specs) {
        Region r = build_region(spec);
        if (r.size() > 60) continue;
        for (auto s : {WeightScheme::Unweighted, WeightScheme::Wt1, WeightScheme::Wt2,
                       WeightScheme::Wt3}) {
            auto dp = tiling_polynomial(r, s);
            auto nv = tiling_polynomial_naive(r, s);
            CHECK_MESSAGE(dp.value == nv.value, spec.to_string(), " scheme ", to_string(s));
        }
    }
}

TEST_CASE("weighted polynomials evaluate to the plain count at q = 1") {
    for (auto spec : {RegionSpec::hex(2, 1, 2), RegionSpec::k(1, 1, 1, 1, 1),
                      RegionSpec::q(1, 1, 1, 1, 1, 1), RegionSpec::f(1, 1, 1, 1, 1, 1, 0, 0, 0)}) {
        Region r = build_region(spec);
        BigInt n = count_tilings(r);
        for (auto s : {WeightScheme::Wt1, WeightScheme::Wt2, WeightScheme::Wt3})
            CHECK(tiling_polynomial(r, s).value.eval_one() == n);
    }
}

TEST_CASE("right-lozenge count is a*b in every tiling of Hex(a,b,c)") {
    for (long long a = 0; a <= 2; ++a)
        for (long long b = 0; b <= 2; ++b)
            for (long long c = 0; c <= 2; ++c) {
                Region h = build_region(RegionSpec::hex(a, b, c));
                auto tilings = enumerate_tilings(h, 100000);
                for (const auto& t : tilings) {
                    long long rights = 0;
                    for (const Lozenge& l : t)
                        if (l.orient() == LozOrient::Right) ++rights;
                    CHECK(rights == a * b);
                }
            }
}

TEST_CASE("eliminate_forced preserves the generating function") {
    for (auto spec :
         {RegionSpec::f(1, 1, 1, 0, 0, 0, 1, 0, 0), RegionSpec::q(1, 2, 1, 1, 1, 0),
          RegionSpec::f(1, 0, 1, 1, 1, 1, 1, 1, 1), RegionSpec::b(1, 1, 0, 1, 1, 1, 1, 1)}) {
        Region r = build_region(spec);
        for (auto s : {WeightScheme::Wt1, WeightScheme::Wt2, WeightScheme::Wt3}) {
            auto [reduced, prefactor] = eliminate_forced(r, s);
            QPoly lhs = tiling_polynomial(r, s).value;
            QPoly rhs = prefactor * tiling_polynomial(reduced, s).value;
            CHECK_MESSAGE(lhs == rhs, spec.to_string(), " scheme ", to_string(s));
        }
    }
}

TEST_CASE("split_region valid implies the product identity") {
    const long long a = 1, b = 1, x = 1, z = 1, t = 1;
    Region q = build_region(RegionSpec::q(a, b, x, 0, z, t));
    Region part(build_region(RegionSpec::hex(z + a + b, x, t)).cells(), q.base_row(),
                q.se_line());
    REQUIRE(split_region(q, part).valid);
    Region rest = q.without(part.cells());
    for (auto s : {WeightScheme::Unweighted, WeightScheme::Wt1, WeightScheme::Wt2}) {
        QPoly whole = tiling_polynomial(q, s).value;
        QPoly split = tiling_polynomial(part, s).value * tiling_polynomial(rest, s).value;
        CHECK(whole == split);
    }
}

TEST_CASE("first calibration against the product formulas") {
    // M_2(Hex(1,1,1)) = q(1+q); the asymmetric cases pin the weight direction.
    for (long long a = 0; a <= 2; ++a)
        for (long long b = 0; b <= 2; ++b)
            for (long long c = 0; c <= 2; ++c) {
                Region h = build_region(RegionSpec::hex(a, b, c));
                CHECK(tiling_polynomial(h, WeightScheme::Wt1).value ==
                      f_hex_wt1(a, b, c).expand());
                CHECK(tiling_polynomial(h, WeightScheme::Wt2).value ==
                      f_hex_wt2(a, b, c).expand());
            }
}
