#include <doctest.h>

#include "qloz/enumerate.hpp"
#include "qloz/errors.hpp"
#include "qloz/json_io.hpp"
#include "qloz/svg.hpp"
#include "qloz/verify.hpp"

using namespace qloz;

TEST_CASE("qpoly json format is bit-exact and sorted") {
    QPoly p;
    p.add_term(2, 1);
    p.add_term(1, 1);
    CHECK(qpoly_to_json(p) == "{\"poly\":[[1,\"1\"],[2,\"1\"]]}");
    CHECK(qpoly_to_json(QPoly::zero()) == "{\"poly\":[]}");

    QPoly big = QPoly::monomial(5, BigInt("123456789012345678901234567890"));
    CHECK(qpoly_from_json(qpoly_to_json(big)) == big);
    CHECK_THROWS_AS(qpoly_from_json("{\"poly\": [[-1, \"2\"]]}"), ParseError);
    CHECK_THROWS_AS(qpoly_from_json("nonsense"), ParseError);
}

TEST_CASE("region spec json") {
    RegionSpec spec = region_spec_from_json(
        "{\"family\":\"f\",\"params\":{\"x\":2,\"y\":1,\"z\":2,\"a\":2,\"b\":3,\"c\":2,"
        "\"d\":3,\"e\":2,\"f\":2}}");
    CHECK(spec.family == RegionSpec::Family::F);
    CHECK(spec.param("b") == 3);
    CHECK(region_spec_from_json(region_spec_to_json(spec)) == spec);

    // Missing parameters default to zero.
    RegionSpec hex = region_spec_from_json("{\"family\":\"hex\",\"params\":{\"a\":1}}");
    CHECK(hex.params == std::vector<long long>{1, 0, 0});

    CHECK_THROWS_AS(region_spec_from_json("{\"family\":\"heptagon\"}"), ParseError);
    CHECK_THROWS_AS(region_spec_from_json("{\"family\":\"hex\",\"params\":{\"q\":1}}"),
                    ParseError);
    CHECK_THROWS_AS(region_spec_from_json("{\"family\":\"hex\",\"params\":{\"a\":-1}}"),
                    ParseError);
}

TEST_CASE("svg rendering is deterministic and shows the region") {
    RegionSpec spec = RegionSpec::f(2, 1, 2, 2, 3, 2, 3, 2, 2);
    std::string once = render_region_svg(spec, std::nullopt);
    std::string twice = render_region_svg(spec, std::nullopt);
    CHECK(once == twice);
    CHECK(once.find("<svg") != std::string::npos);
    CHECK(once.find("<polygon") != std::string::npos);
    CHECK(once.find("#9e9e9e") != std::string::npos);  // shaded dents

    Region r = build_region(RegionSpec::hex(1, 1, 1));
    auto tilings = enumerate_tilings(r, 1);
    REQUIRE(!tilings.empty());
    std::string tiled = render_region_svg(RegionSpec::hex(1, 1, 1), tilings.front());
    CHECK(tiled.find("#fdd0a2") != std::string::npos);  // a right lozenge is present
}

TEST_CASE("suite report json carries pass counts") {
    SuiteReport report = run_suite("hex", 1, 2);
    CHECK(report.all_pass());
    CHECK(report.total() == 16);
    std::string j = report.to_json();
    CHECK(j.find("\"suite\":\"hex\"") != std::string::npos);
    CHECK(j.find("\"passed\":16") != std::string::npos);
    CHECK_THROWS(run_suite("bogus", 1, 1));
}
