#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "koba/spec_io.hpp"

using namespace koba;
using nlohmann::json;

TEST_CASE("parse the four spec types") {
    {
        const json doc = {{"type", "intersection"},
                          {"halfplanes", json::array()},
                          {"disks", {{0.0, 0.0, 1.0}}}};
        const auto parsed = parse_domain_spec(doc);
        CHECK(parsed.type == "intersection");
        CHECK_FALSE(parsed.domain.is_ball());
        CHECK(parsed.domain.region().contains({0.0, 0.0}));
    }
    {
        const json doc = {{"type", "hull"}, {"generators", {{0.0, 0.0, 1.0}, {2.0, 0.0, 0.0}}}};
        const auto parsed = parse_domain_spec(doc);
        CHECK(parsed.domain.region().kind() == ConvexRegion2D::Kind::Hull);
        CHECK(parsed.domain.region().contains({1.2, 0.0}));
    }
    {
        const json doc = {{"type", "ball"},
                          {"dim", 2},
                          {"center", {{0.0, 0.0}, {0.0, 0.0}}},
                          {"radius", 1.0}};
        const auto parsed = parse_domain_spec(doc);
        CHECK(parsed.domain.is_ball());
        CHECK(parsed.domain.dim() == 2);
    }
    {
        const json doc = {{"type", "lens"}, {"h", 0.5}};
        const auto parsed = parse_domain_spec(doc);
        REQUIRE(parsed.lens.has_value());
        CHECK(parsed.lens->alpha == doctest::Approx(1.5));
        CHECK(parsed.domain.region().contains({0.0, 0.0}));
    }
}

TEST_CASE("diagnostics carry the failing field") {
    CHECK_THROWS_WITH_AS(parse_domain_spec(json{{"type", "widget"}}),
                         doctest::Contains("unknown type"), SpecParseError);
    CHECK_THROWS_WITH_AS(parse_domain_spec(json{{"type", "lens"}}),
                         doctest::Contains("missing field 'h'"), SpecParseError);
    CHECK_THROWS_WITH_AS(parse_domain_spec(json{{"type", "lens"}, {"h", 2.0}}),
                         doctest::Contains("spec.h"), SpecParseError);
    CHECK_THROWS_WITH_AS(
        parse_domain_spec(json{{"type", "intersection"}, {"halfplanes", {{1.0, 1.0, 1.0}}}}),
        doctest::Contains("unit length"), SpecParseError);
    CHECK_THROWS_WITH_AS(
        parse_domain_spec(json{{"type", "hull"}, {"generators", {{0.0, 0.0}}}}),
        doctest::Contains("generators[0]"), SpecParseError);
    // Empty intersection: constraints present but incompatible.
    CHECK_THROWS_AS(
        parse_domain_spec(json{{"type", "intersection"},
                               {"disks", {{-5.0, 0.0, 1.0}, {5.0, 0.0, 1.0}}}}),
        SpecParseError);
}

TEST_CASE("canonical echo round-trips bit-exactly") {
    const json doc = {{"type", "intersection"},
                      {"halfplanes", {{1.0, 0.0, 0.1234567890123456789}, {-1.0, 0.0, 1.0},
                                      {0.0, 1.0, 0.7}, {0.0, -1.0, 0.7}}},
                      {"disks", {{0.01, -0.02, 1.5000000000000002}}}};
    const auto parsed = parse_domain_spec(doc);
    const std::string dumped = parsed.canonical.dump();
    const auto reparsed = parse_domain_spec(json::parse(dumped));
    REQUIRE(reparsed.domain.region().halfplanes().size() ==
            parsed.domain.region().halfplanes().size());
    for (std::size_t i = 0; i < parsed.domain.region().halfplanes().size(); ++i) {
        CHECK(reparsed.domain.region().halfplanes()[i].normal ==
              parsed.domain.region().halfplanes()[i].normal);
        CHECK(reparsed.domain.region().halfplanes()[i].offset ==
              parsed.domain.region().halfplanes()[i].offset);
    }
    REQUIRE(reparsed.domain.region().disks().size() == parsed.domain.region().disks().size());
    CHECK(reparsed.domain.region().disks()[0].center == parsed.domain.region().disks()[0].center);
    CHECK(reparsed.domain.region().disks()[0].radius == parsed.domain.region().disks()[0].radius);

    const json ball_doc = {{"type", "ball"},
                           {"dim", 2},
                           {"center", {{0.1000000000000000055511151231257827, 0.0}, {0.0, -0.3}}},
                           {"radius", 2.25}};
    const auto ball = parse_domain_spec(ball_doc);
    const auto ball_again = parse_domain_spec(json::parse(ball.canonical.dump()));
    CHECK(ball_again.domain.center()[0] == ball.domain.center()[0]);
    CHECK(ball_again.domain.center()[1] == ball.domain.center()[1]);
    CHECK(ball_again.domain.radius() == ball.domain.radius());
}

TEST_CASE("point lists accept real and interleaved forms") {
    {
        const auto v = parse_point_list("0.5,0.25", 1);
        CHECK(v[0] == cx{0.5, 0.25});
    }
    {
        const auto v = parse_point_list("0.5", 1);
        CHECK(v[0] == cx{0.5, 0.0});
    }
    {
        const auto v = parse_point_list("0.5,0.5", 2);
        CHECK(v[0] == cx{0.5, 0.0});
        CHECK(v[1] == cx{0.5, 0.0});
    }
    {
        const auto v = parse_point_list("1,2,3,4", 2);
        CHECK(v[0] == cx{1.0, 2.0});
        CHECK(v[1] == cx{3.0, 4.0});
    }
    CHECK_THROWS_AS(parse_point_list("1,2,3", 2), SpecParseError);
    CHECK_THROWS_AS(parse_point_list("1,zebra", 1), SpecParseError);
}

TEST_CASE("nine significant digits, locale independent") {
    CHECK(format_sig9(1.0 / 3.0) == "0.333333333");
    CHECK(format_sig9(1.732050808) == "1.73205081");
    CHECK(format_sig9(1.49e-9) == "1.49e-09");
    CHECK(format_sig9(2.0) == "2");
}
