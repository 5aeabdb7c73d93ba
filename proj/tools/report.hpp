#pragma once

#include "crtube/models.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace crtube::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

struct Outcome {
  Json results;
  bool ok = true;
};

/// Parameter errors throw std::invalid_argument; the caller maps them to exit status 2.
Outcome sphere_tubes(int r, double tol, int samples, std::uint64_t seed);
Outcome involutions(int p, int q, int m);
/// model: "tube-cone" (p, j, k) or "siegel" (p, q, j, k).
Outcome levi_chain(const std::string& model, int p, int q, int j, int k, int kmax);

/// Case names: exp, trig, pi-plus, parabolic-<s>.
struct BaseCase {
  TubeRealizationSpec spec;
  /// Output coordinates are scale * x.
  double scale = 1.0;
  std::string name;
};
BaseCase base_case(const std::string& name, int r);

using Points = std::vector<std::vector<double>>;

/// Base points in output coordinates.
Points base_points(const BaseCase& c, int samples, std::uint64_t seed);
/// Traced branches of an r = 2 base inside [-3, 3]^2, in output coordinates.
std::vector<Points> base_branches(const BaseCase& c, std::uint64_t seed);
/// max |baseEquation| at the points, mapped back to base coordinates.
double base_residual(const BaseCase& c, const Points& pts);

std::string to_csv(const Points& pts, int r);
/// 800 x 800 viewport over [-3, 3]^2, one polyline per branch.
std::string to_svg(const std::vector<Points>& branches);

Json envelope(const std::string& command, const Json& parameters, std::uint64_t seed, const Outcome& out);

} // namespace crtube::cli
