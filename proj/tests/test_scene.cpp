#include "doctest.h"
#include "nlphase/errors.hpp"
#include "nlphase/scene.hpp"

#include <fstream>

using namespace nlphase;

namespace {

const char* kMinimal =
    R"({"grid": {"dim": 2, "origin": [-0.5, -0.5], "extent": [1, 1], "cells": [32, 32]}})";

const char* kFull = R"({
  "grid": {"dim": 2, "origin": [-0.5, -0.5], "extent": [1, 1], "cells": [48, 48]},
  "well": {"form": "quartic", "alpha": 0.0, "beta": 1.0, "scale": 2.0},
  "eps": 0.05,
  "plan": {"tile": 32, "threads": 2, "mode": "compensated"},
  "interface": {
    "outside_is_alpha": true,
    "facets": [
      {"normal": [0, 1], "offset": 0, "verts": [[-0.5, 0], [0.5, 0]]}
    ]
  },
  "facet_density": [4.0],
  "atoms": [{"x": [0.1, 0.25], "mass": 0.5, "radius": 0.2}],
  "ladder": [0.01, 0.001, 0.0001],
  "route": "quasi1d"
})";

} // namespace

TEST_CASE("minimal scene takes defaults") {
    Scene sc = parse_scene(kMinimal);
    CHECK(sc.grid.cell_count() == 1024);
    CHECK(sc.eps == 1e-2);
    CHECK(sc.well.alpha == 0.0);
    CHECK(sc.well.beta == 1.0);
    CHECK(sc.well.form == WellForm::quartic);
    CHECK(sc.plan.tile == 64);
    CHECK(sc.plan.mode == SumMode::pairwise);
    CHECK_FALSE(sc.interface.has_value());
    CHECK(sc.atoms.empty());
    CHECK(sc.route == "auto");
}

TEST_CASE("full scene round trip") {
    Scene sc = parse_scene(kFull);
    CHECK(sc.eps == 0.05);
    CHECK(sc.well.scale == 2.0);
    CHECK(sc.plan.threads == 2);
    CHECK(sc.plan.mode == SumMode::compensated);
    REQUIRE(sc.interface.has_value());
    CHECK(sc.interface->facets.size() == 1);
    CHECK(sc.interface->facets[0].verts[1][0] == 0.5);
    CHECK(sc.facet_density == std::vector<double>{4.0});
    REQUIRE(sc.atoms.size() == 1);
    CHECK(sc.atoms[0].mass == 0.5);
    CHECK(sc.atoms[0].radius == 0.2);
    CHECK(sc.ladder.size() == 3);
    CHECK(sc.route == "quasi1d");

    DiscreteMeasure mu = scene_measure(sc);
    CHECK(mu.carrier.facets.size() == 1);
    CHECK(mu.facet_density == std::vector<double>{4.0});
    REQUIRE(mu.atoms.size() == 1);
    CHECK(mu.atoms[0].mass == 0.5);
    CHECK(mu.atoms[0].radius == 0.2);
}

TEST_CASE("missing densities are zero-filled in the measure") {
    Scene sc = parse_scene(kFull);
    sc.facet_density.clear();
    DiscreteMeasure mu = scene_measure(sc);
    REQUIRE(mu.facet_density.size() == 1);
    CHECK(mu.facet_density[0] == 0.0);
}

TEST_CASE("scene validation") {
    CHECK_THROWS_AS(parse_scene("not json at all {"), ConfigError);
    CHECK_THROWS_AS(parse_scene("{}"), ConfigError); // no grid
    CHECK_THROWS_AS(
        parse_scene(
            R"({"grid": {"origin": [0,0], "extent": [1,1], "cells": [4,4]}})"),
        ConfigError); // dim missing
    auto with = [](const char* extra) {
        return std::string(R"({"grid": {"dim": 2, "origin": [-0.5,-0.5], "extent": [1,1], "cells": [8,8]},)") +
               extra + "}";
    };
    CHECK_THROWS_AS(parse_scene(with(R"("eps": 1.5)")), ConfigError);
    CHECK_THROWS_AS(parse_scene(with(R"("eps": 0)")), ConfigError);
    CHECK_THROWS_AS(parse_scene(with(R"("route": "sideways")")), ConfigError);
    CHECK_THROWS_AS(parse_scene(with(R"("well": {"form": "sextic"})")), ConfigError);
    CHECK_THROWS_AS(parse_scene(with(R"("well": {"alpha": 1.0, "beta": 0.0})")),
                    ConfigError);
    CHECK_THROWS_AS(parse_scene(with(R"("plan": {"mode": "fast"})")), ConfigError);
    CHECK_THROWS_AS(parse_scene(with(R"("plan": {"tile": 0})")), ConfigError);
    CHECK_THROWS_AS(parse_scene(with(R"("ladder": [0.1, 2.0])")), ConfigError);
    CHECK_THROWS_AS(
        parse_scene(with(
            R"("interface": {"facets": [{"normal": [0,1], "offset": 0, "verts": [[-0.5,0],[0.5,0]]}]}, "facet_density": [1.0, 2.0])")),
        ConfigError);
    CHECK_THROWS_AS(parse_scene(with(R"("interface": {"facets": []})")), ConfigError);
}

TEST_CASE("load_scene reads a file and rejects a missing one") {
    CHECK_THROWS_AS(load_scene("/nonexistent/scene.json"), ConfigError);
    const char* path = "scene_roundtrip_tmp.json";
    {
        std::ofstream out(path);
        out << kMinimal;
    }
    Scene sc = load_scene(path);
    CHECK(sc.grid.cell_count() == 1024);
    std::remove(path);
}
