#include "report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace crtube::cli;

namespace {

void write_out(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write to " + path + " failed");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tube realizations, involutions and Levi kernels of homogeneous CR-manifolds"};
  app.fallthrough();
  app.require_subcommand(1);

  int r = 2, p = 1, q = 2, j = 0, k = 0, m = 1, s = 1, kmax = 3, samples = 1000;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string caseName = "exp", format = "json", outPath, model = "tube-cone";

  app.add_option("--r", r, "Dimension of the tube");
  app.add_option("--p", p, "First signature index");
  app.add_option("--q", q, "Second signature index");
  app.add_option("--j", j, "Positive eigenvalues of the cone point");
  app.add_option("--k", k, "Negative eigenvalues of the cone point");
  app.add_option("--m", m, "Subspace dimension in the Grassmannian");
  app.add_option("--s", s, "Parabolic family index (emit-base with --case parabolic)");
  app.add_option("--case", caseName, "Base case: exp, trig, pi-plus, parabolic or parabolic-<s>");
  app.add_option("--kmax", kmax, "Highest Levi kernel index");
  app.add_option("--tol", tol, "Residual tolerance")->capture_default_str();
  app.add_option("--samples", samples, "Sample count")->capture_default_str();
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  app.add_option("--format", format, "json | csv | svg");
  app.add_option("--out", outPath, "Write the primary output to this file");

  auto* tubes = app.add_subcommand("sphere-tubes", "Catalog of tube realizations of the sphere");
  auto* invol = app.add_subcommand("involutions", "Involution types of S^{p,q}_m");
  auto* levi = app.add_subcommand("levi-chain", "Iterated Levi kernels of cone tubes and Siegel models");
  levi->add_option("--model", model, "tube-cone | siegel");
  auto* base = app.add_subcommand("emit-base", "Sampled base of a catalog tube as csv or svg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    Outcome out;
    Json params;
    std::string command;
    if (!base->parsed() && format != "json") throw std::invalid_argument("only json output is supported for this command");
    if (base->parsed() && format == "json") format = "csv";
    if (tubes->parsed()) {
      command = "sphere-tubes";
      params = Json{{"r", r}, {"tol", tol}, {"samples", samples}};
      out = sphere_tubes(r, tol, samples, seed);
    } else if (invol->parsed()) {
      command = "involutions";
      params = Json{{"p", p}, {"q", q}, {"m", m}};
      out = involutions(p, q, m);
    } else if (levi->parsed()) {
      command = "levi-chain";
      params = Json{{"model", model}, {"p", p}, {"q", q}, {"j", j}, {"k", k}, {"kmax", kmax}};
      out = levi_chain(model, p, q, j, k, kmax);
    } else if (base->parsed()) {
      command = "emit-base";
      std::string name = caseName == "parabolic" ? "parabolic-" + std::to_string(s) : caseName;
      if (format != "csv" && format != "svg") throw std::invalid_argument("emit-base: format must be csv or svg");
      BaseCase bc = base_case(name, r);
      std::string text;
      double residual = 0;
      int count = 0;
      if (format == "csv") {
        Points pts = base_points(bc, samples, seed);
        text = to_csv(pts, r);
        residual = base_residual(bc, pts);
        count = static_cast<int>(pts.size());
      } else {
        auto branches = base_branches(bc, seed);
        text = to_svg(branches);
        for (const auto& b : branches) {
          residual = std::max(residual, base_residual(bc, b));
          count += static_cast<int>(b.size());
        }
      }
      if (outPath.empty()) {
        std::cout << text;
        return residual <= tol ? 0 : 1;
      }
      write_out(outPath, text);
      params = Json{{"case", name}, {"r", r}, {"format", format}, {"samples", samples}, {"out", outPath}};
      out.results = Json{{"points", count}, {"maxBaseResidual", residual}, {"base", bc.spec.baseText}, {"scale", bc.scale}};
      out.ok = residual <= tol;
    }
    std::string doc = envelope(command, params, seed, out).dump(2) + "\n";
    if (!outPath.empty() && command != "emit-base") write_out(outPath, doc);
    else std::cout << doc;
    return out.ok ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
