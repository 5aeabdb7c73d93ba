#include "report.hpp"

#include <doctest.h>

#include <cmath>

using namespace crtube;
using namespace crtube::cli;

TEST_CASE("sphere-tubes report") {
  auto out = sphere_tubes(2, 1e-9, 200, 0);
  CHECK(out.ok);
  CHECK(out.results["count"] == 4);
  CHECK(out.results["signaturesPairwiseDistinct"] == true);
  const auto& entries = out.results["entries"];
  REQUIRE(entries.size() == 4);
  CHECK(entries[0]["name"] == "exp");
  CHECK(entries[2]["affinelyHomogeneous"] == true);
  CHECK(entries[0]["affinelyHomogeneous"] == false);
  for (const auto& e : entries) {
    CHECK(e["ok"] == true);
    CHECK(e["coveringResidual"].get<double>() <= 1e-9);
    CHECK(e["validation"]["conditionIII"] == true);
  }
  // deterministic output for a fixed seed
  CHECK(sphere_tubes(2, 1e-9, 200, 0).results.dump() == out.results.dump());
  CHECK_THROWS_AS(sphere_tubes(1, 1e-9, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(sphere_tubes(7, 1e-9, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(sphere_tubes(2, 0.0, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(sphere_tubes(2, 1e-9, 0, 0), std::invalid_argument);
}

TEST_CASE("involutions report") {
  auto out = involutions(2, 2, 1);
  CHECK(out.ok);
  const auto& types = out.results["types"];
  REQUIRE(types.size() == 4);
  for (const auto& t : types) CHECK(t["admissible"] == true);
  CHECK(types[3]["eps"] == -1);
  CHECK(types[3]["delta"] == -1);
  auto odd = involutions(1, 2, 1);
  CHECK(odd.results["types"][0]["fixedSet"]["value"] == 1);
  CHECK(odd.results["types"][1]["admissible"] == false);
  CHECK_THROWS_AS(involutions(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(involutions(1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(involutions(2, 3, 0), std::invalid_argument);
}

TEST_CASE("levi-chain report") {
  auto tube = levi_chain("tube-cone", 2, 0, 1, 0, 3);
  CHECK(tube.ok);
  CHECK(tube.results["dims"] == Json::array({3, 1, 0, 0}));
  CHECK(tube.results["nondegeneracyOrder"] == 2);
  auto sig = levi_chain("siegel", 2, 3, 1, 0, 3);
  CHECK(sig.ok);
  CHECK(sig.results["split"].size() == 4);
  CHECK_THROWS_AS(levi_chain("sphere", 2, 3, 1, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(levi_chain("tube-cone", 2, 0, 1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(levi_chain("siegel", 2, 2, 1, 0, 2), std::invalid_argument);
}

TEST_CASE("base emission") {
  for (const char* name : {"exp", "trig", "pi-plus", "parabolic-1", "parabolic-2"}) {
    auto bc = base_case(name, 2);
    auto pts = base_points(bc, 100, 3);
    CHECK(pts.size() == 100);
    CHECK(base_residual(bc, pts) < 1e-9);
    std::string csv = to_csv(pts, 2);
    CHECK(csv.rfind("x1,x2\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 101);
    auto branches = base_branches(bc, 0);
    CHECK_FALSE(branches.empty());
    std::string svg = to_svg(branches);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
  }
  // pi-plus is the trig base scaled by two: cos x1 = exp(x2) on |x1| < pi/2
  auto pp = base_case("pi-plus", 2);
  for (const auto& x : base_points(pp, 50, 1)) {
    CHECK(std::abs(x[0]) < M_PI / 2);
    CHECK(std::abs(std::cos(x[0]) - std::exp(x[1])) < 1e-9);
  }
  CHECK_THROWS_AS(base_case("hyperbolic", 2), std::invalid_argument);
  CHECK_THROWS_AS(base_case("parabolic-3", 2), std::invalid_argument);
}

TEST_CASE("report envelope") {
  Outcome o{Json{{"x", 1}}, false};
  auto env = envelope("cmd", Json{{"a", 2}}, 5, o);
  std::vector<std::string> keys;
  for (auto it = env.begin(); it != env.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"schemaVersion", "command", "parameters", "results", "ok", "seed", "toolVersion"});
  CHECK(env["ok"] == false);
  CHECK(env["seed"] == 5);
  CHECK(env["toolVersion"] == kToolVersion);
}
