#include "report.hpp"

#include "crtube/levi.hpp"
#include "crtube/tube_engine.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crtube::cli {

namespace {

Json vec_json(const ExactVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Json counts_json(const SpectrumCounts& c) {
  return Json{{"zero", c.zero}, {"nonzeroReal", c.real}, {"purelyImaginary", c.imaginary}, {"genericComplex", c.generic}};
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string case_tag(TubeCase c) {
  switch (c) {
  case TubeCase::exp: return "exp";
  case TubeCase::trig: return "trig";
  case TubeCase::parabolic: return "parabolic";
  }
  return "?";
}

} // namespace

Outcome sphere_tubes(int r, double tol, int samples, std::uint64_t seed) {
  if (r < 2 || r > 6) throw std::invalid_argument("sphere-tubes: r must lie in [2, 6]");
  if (!(tol > 0)) throw std::invalid_argument("sphere-tubes: tol must be positive");
  if (samples < 1) throw std::invalid_argument("sphere-tubes: samples must be positive");
  Outcome out;
  Json entries = Json::array();
  std::vector<InvariantSignature> sigs;
  for (const auto& c : tube_catalog(r)) {
    Json e;
    e["name"] = c.name;
    e["case"] = case_tag(c.caseTag);
    if (c.caseTag == TubeCase::parabolic) e["s"] = c.s;
    e["coveringMap"] = c.coveringMap.str();
    e["base"] = c.baseText;
    Json dom = Json::array();
    for (const auto& d : c.domainConstraints) dom.push_back(d.text);
    e["domain"] = dom;
    e["translations"] = c.translationConvention;
    e["subalgebra"] = c.subalgebra.label;
    Json fields = Json::array();
    for (const auto& f : c.subalgebra.basis) fields.push_back(f.str());
    e["basis"] = fields;
    e["basePoint"] = vec_json(c.basePoint);

    auto rep = validate_subalgebra(c.subalgebra.ambient, c.subalgebra, c.basePoint);
    Json v{{"abelian", rep.abelian}, {"totallyReal", rep.totallyReal}, {"spansTangent", rep.spansTangent}, {"dimV", rep.dimV}};
    if (rep.involutionFound) {
      v["involution"] = Json{{"T", rep.involutionFound->T.str()},
                             {"affine", rep.involutionFound->affine.has_value()},
                             {"unique", rep.involutionFound->unique},
                             {"residual", rep.involutionFound->residual}};
    } else {
      v["involution"] = nullptr;
    }
    v["antiTangentDim"] = rep.antiTangentDim;
    v["conditionIII"] = rep.conditionIII;
    e["validation"] = v;

    auto cov = verify_covering(c, c.target, samples, tol, seed);
    e["coveringResidual"] = cov.maxResidual;
    double fc = 0.0;
    for (int k = 0; k < r; ++k) {
      CVector dir(r, 0.0);
      dir[k] = cplx(0.0, 1.0);
      fc = std::max(fc, check_field_correspondence(c, dir, c.subalgebra.basis[k], samples, tol, seed).maxResidual);
    }
    e["fieldCorrespondenceResidual"] = fc;
    auto sig = conjugacy_invariants(c.subalgebra, seed);
    sigs.push_back(sig);
    e["signature"] = Json{{"dimNilpotent", sig.dimNilpotent}, {"genericSpectrum", counts_json(sig.genericSpectrum)}};
    e["affinelyHomogeneous"] = affine_homogeneity(c, std::min(samples, 200), tol, seed);
    bool ok = rep.all() && rep.involutionFound->unique && rep.dimV == r && cov.pass && fc <= tol;
    e["ok"] = ok;
    out.ok = out.ok && ok;
    entries.push_back(std::move(e));
  }
  std::set<InvariantSignature> distinct(sigs.begin(), sigs.end());
  bool pairwise = distinct.size() == sigs.size();
  out.ok = out.ok && pairwise && static_cast<int>(sigs.size()) == r + 2;
  out.results = Json{{"count", entries.size()}, {"signaturesPairwiseDistinct", pairwise}, {"entries", std::move(entries)}};
  return out;
}

Outcome involutions(int p, int q, int m) {
  if (m < 1 || p < m || q < m) throw std::invalid_argument("involutions: need p, q >= m >= 1");
  if (p == q && q == m) throw std::invalid_argument("involutions: the case p = q = m is excluded");
  const int n = p + q;
  Outcome out;
  auto su = su_basis(p, q);
  // real basis of sl(n, C)
  std::vector<ExactMatrix> sl;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && i == n - 1) continue;
      for (const GaussRational& s : {GaussRational(1), GaussRational::I()}) {
        ExactMatrix x(n, n);
        x(i, j) = s;
        if (i == j) x(n - 1, n - 1) = -s;
        sl.push_back(x);
      }
    }
  Json rows = Json::array();
  for (auto kind : {InvolutionKind::I, InvolutionKind::II, InvolutionKind::III, InvolutionKind::IV}) {
    Json row;
    row["type"] = to_string(kind);
    bool adm = involution_admissible(kind, p, q);
    row["admissible"] = adm;
    if (!adm) {
      rows.push_back(std::move(row));
      continue;
    }
    auto tau = involution(kind, p, q);
    auto ids = verify_involution(tau);
    int gdim = static_cast<int>(fixed_subalgebra(su, tau, 1).size());
    int ldim = static_cast<int>(fixed_subalgebra(sl, tau, 1).size());
    int expected = 0;
    std::string gname;
    switch (kind) {
    case InvolutionKind::I:
      expected = n * (n - 1) / 2;
      gname = "so(p,q)";
      break;
    case InvolutionKind::II:
      expected = p * (2 * p + 1);
      gname = "sp(p,R)";
      break;
    case InvolutionKind::III:
      expected = (n / 2) * (n + 1);
      gname = "sp(p',q')";
      break;
    case InvolutionKind::IV:
      expected = p * (2 * p - 1);
      gname = "so(p,H)";
      break;
    }
    row["eps"] = tau.eps;
    row["delta"] = tau.delta;
    row["tauTilde"] = tau.tauTilde.str();
    row["squareIsEps"] = ids.squareIsEps;
    row["formScalesByDelta"] = ids.formScalesByDelta;
    row["fixedSubalgebra"] = gname;
    row["fixedSubalgebraDim"] = gdim;
    row["fixedSubalgebraDimExpected"] = expected;
    row["fixedSlDim"] = ldim;
    row["fixedSlDimExpected"] = n * n - 1;
    Json fs;
    switch (kind) {
    case InvolutionKind::I: fs = Json{{"formula", "m(n-2m)"}, {"value", m * (n - 2 * m)}}; break;
    case InvolutionKind::II: fs = Json{{"formula", "m(n-m)"}, {"value", m * (n - m)}}; break;
    case InvolutionKind::III:
      fs = m % 2 ? Json{{"formula", "empty (m odd)"}, {"value", nullptr}} : Json{{"formula", "not tabulated"}, {"value", nullptr}};
      break;
    case InvolutionKind::IV:
      fs = m % 2 ? Json{{"formula", "empty (m odd)"}, {"value", nullptr}} : Json{{"formula", "m(n-m-1)"}, {"value", m * (n - m - 1)}};
      break;
    }
    row["fixedSet"] = fs;
    bool ok = ids.squareIsEps && ids.formScalesByDelta && gdim == expected && ldim == n * n - 1;
    row["ok"] = ok;
    out.ok = out.ok && ok;
    rows.push_back(std::move(row));
  }
  out.results = Json{{"n", n}, {"crDimension", m * (n - 2 * m)}, {"crCodimension", m * m}, {"types", std::move(rows)}};
  return out;
}

Outcome levi_chain(const std::string& model, int p, int q, int j, int k, int kmax) {
  if (kmax < 1) throw std::invalid_argument("levi-chain: kmax must be at least 1");
  if (p < 1 || j < 0 || k < 0 || j + k > p) throw std::invalid_argument("levi-chain: need p >= 1, j, k >= 0, j + k <= p");
  Outcome out;
  RigidGerm germ;
  Json res;
  if (model == "tube-cone") {
    germ = to_rigid(cone_tube_germ(ConeSpec{p, j, k}, kmax + 2));
  } else if (model == "siegel") {
    if (q <= p) throw std::invalid_argument("levi-chain: siegel needs q > p");
    germ = siegel_germ(siegel_model(p, q, j, k), kmax + 2);
  } else {
    throw std::invalid_argument("levi-chain: model must be tube-cone or siegel");
  }
  auto chain = crtube::levi_chain(germ, kmax);
  auto other = crtube::levi_chain(germ, kmax, 1);
  bool monotone = true;
  for (size_t i = 1; i < chain.dims.size(); ++i) monotone = monotone && chain.dims[i] <= chain.dims[i - 1];
  bool frameIndependent = chain.dims == other.dims;
  res["model"] = model;
  res["coordinates"] = germ.labels;
  res["crDimension"] = germ.m;
  res["codimension"] = germ.c;
  res["dims"] = chain.dims;
  Json kers = Json::array();
  for (const auto& ker : chain.kernels) {
    Json kk = Json::array();
    for (const auto& v : ker) kk.push_back(vec_json(v));
    kers.push_back(std::move(kk));
  }
  res["kernels"] = kers;
  res["stabilized"] = chain.stabilized;
  res["nondegeneracyOrder"] = chain.nondegeneracyOrder ? Json(*chain.nondegeneracyOrder) : Json(nullptr);
  res["monotone"] = monotone;
  res["frameIndependent"] = frameIndependent;
  out.ok = monotone && frameIndependent;
  if (model == "siegel") {
    Json levels = Json::array();
    for (const auto& lv : siegel_split(siegel_model(p, q, j, k), kmax)) {
      Json wk = Json::array();
      for (const auto& w : lv.wKernel) wk.push_back(vec_json(w));
      levels.push_back(Json{{"k", lv.k},
                            {"dimSigma", lv.dimSigma},
                            {"dimTube", lv.tubeKernel.size()},
                            {"W", wk},
                            {"directSum", lv.directSum},
                            {"W0isW", lv.w0IsW},
                            {"FInclusion", lv.fInclusion},
                            {"recursion", lv.recursion}});
      out.ok = out.ok && lv.all();
    }
    res["split"] = levels;
  }
  out.results = res;
  return out;
}

BaseCase base_case(const std::string& name, int r) {
  if (r < 2 || r > 6) throw std::invalid_argument("emit-base: r must lie in [2, 6]");
  auto cat = tube_catalog(r);
  if (name == "exp") return {cat[0], 1.0, name};
  if (name == "trig") return {cat[1], 1.0, name};
  if (name == "pi-plus") return {cat[1], 2.0, name};
  const std::string pre = "parabolic-";
  if (name.rfind(pre, 0) == 0) {
    int s = 0;
    try {
      s = std::stoi(name.substr(pre.size()));
    } catch (const std::exception&) {
      s = 0;
    }
    if (s >= 1 && s <= r) return {cat[1 + s], 1.0, name};
  }
  throw std::invalid_argument("emit-base: unsupported case " + name + " (use exp, trig, pi-plus, parabolic-<s>)");
}

namespace {

double value(const Expr& g, const std::vector<double>& x) { return g.eval(CVector(x.begin(), x.end())).real(); }

std::vector<double> gradient(const Expr& g, const std::vector<double>& x) {
  std::vector<double> out(x.size());
  for (size_t k = 0; k < x.size(); ++k) {
    CVector d(x.size(), 0.0);
    d[k] = 1.0;
    out[k] = g.eval_dual(CVector(x.begin(), x.end()), d).der.real();
  }
  return out;
}

bool project(const Expr& g, std::vector<double>& x) {
  for (int it = 0; it < 50; ++it) {
    double v = value(g, x);
    auto gr = gradient(g, x);
    double g2 = 0;
    for (double c : gr) g2 += c * c;
    if (!std::isfinite(v) || g2 < 1e-24) return false;
    if (std::abs(v) <= 1e-14 * std::max(1.0, std::sqrt(g2))) return true;
    for (size_t k = 0; k < x.size(); ++k) x[k] -= v * gr[k] / g2;
  }
  return false;
}

} // namespace

Points base_points(const BaseCase& c, int samples, std::uint64_t seed) {
  Points pts = sample_base(c.spec, samples, seed);
  for (auto& x : pts)
    for (double& v : x) v *= c.scale;
  return pts;
}

std::vector<Points> base_branches(const BaseCase& c, std::uint64_t seed) {
  if (c.spec.r != 2) throw std::invalid_argument("emit-base: svg output needs r = 2");
  const Expr& g = c.spec.baseEquation;
  const double lim = 3.0 / c.scale, h = 0.005 / c.scale;
  auto inside = [&](const std::vector<double>& x) {
    if (std::abs(x[0]) > lim || std::abs(x[1]) > lim) return false;
    for (const auto& d : c.spec.domainConstraints)
      if (!(x[d.index] > d.lo && x[d.index] < d.hi)) return false;
    return true;
  };
  BaseCase wide = c;
  wide.spec.boxLo = -lim;
  wide.spec.boxHi = lim;
  Points starts = sample_base(wide.spec, 64, seed);
  std::vector<Points> branches;
  auto near_existing = [&](const std::vector<double>& x) {
    for (const auto& b : branches)
      for (const auto& y : b)
        if (std::hypot(x[0] - y[0] / c.scale, x[1] - y[1] / c.scale) < 20 * h) return true;
    return false;
  };
  for (const auto& s0 : starts) {
    if (near_existing(s0)) continue;
    Points halves[2];
    bool closed = false;
    for (int dir = 0; dir < 2 && !closed; ++dir) {
      std::vector<double> x = s0;
      for (int step = 0; step < 200000; ++step) {
        auto gr = gradient(g, x);
        double nrm = std::hypot(gr[0], gr[1]);
        if (nrm == 0) break;
        double sgn = dir == 0 ? 1.0 : -1.0;
        std::vector<double> y{x[0] - sgn * h * gr[1] / nrm, x[1] + sgn * h * gr[0] / nrm};
        if (!project(g, y) || !inside(y)) break;
        x = y;
        halves[dir].push_back(x);
        if (step > 10 && std::hypot(x[0] - s0[0], x[1] - s0[1]) < h) {
          closed = true;
          break;
        }
      }
    }
    Points branch(halves[1].rbegin(), halves[1].rend());
    branch.push_back(s0);
    branch.insert(branch.end(), halves[0].begin(), halves[0].end());
    if (closed) branch.push_back(s0);
    for (auto& x : branch)
      for (double& v : x) v *= c.scale;
    branches.push_back(std::move(branch));
  }
  return branches;
}

double base_residual(const BaseCase& c, const Points& pts) {
  double m = 0;
  for (const auto& p : pts) {
    std::vector<double> x = p;
    for (double& v : x) v /= c.scale;
    m = std::max(m, std::abs(value(c.spec.baseEquation, x)));
  }
  return m;
}

std::string to_csv(const Points& pts, int r) {
  std::ostringstream os;
  for (int k = 0; k < r; ++k) os << (k ? "," : "") << "x" << k + 1;
  os << "\n";
  for (const auto& p : pts) {
    for (int k = 0; k < r; ++k) os << (k ? "," : "") << fmt(p[k]);
    os << "\n";
  }
  return os.str();
}

std::string to_svg(const std::vector<Points>& branches) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  for (const auto& b : branches) {
    os << "<polyline fill=\"none\" stroke=\"black\" points=\"";
    bool first = true;
    for (const auto& p : b) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3f,%.3f", (p[0] + 3.0) / 6.0 * 800.0, 800.0 - (p[1] + 3.0) / 6.0 * 800.0);
      os << (first ? "" : " ") << buf;
      first = false;
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

Json envelope(const std::string& command, const Json& parameters, std::uint64_t seed, const Outcome& out) {
  return Json{{"schemaVersion", kSchemaVersion}, {"command", command}, {"parameters", parameters}, {"results", out.results},
              {"ok", out.ok},                    {"seed", seed},       {"toolVersion", kToolVersion}};
}

} // namespace crtube::cli
