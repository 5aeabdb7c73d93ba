// One line per acceptance criterion; exit status 1 if any criterion fails.

#include "oracles.hpp"

#include "crtube/levi.hpp"
#include "crtube/models.hpp"
#include "crtube/tube_engine.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

using namespace crtube;
using oracle::cplx;

namespace {

CVector to_c(const ExactVector& v) {
  CVector out;
  for (const auto& x : v) out.push_back(x.to_complex());
  return out;
}

bool in_span_of(const std::vector<ExactVector>& basis, const ExactVector& v) {
  int before = basis.empty() ? 0 : rank_exact(ExactMatrix::from_rows(basis));
  auto rows = basis;
  rows.push_back(v);
  return rank_exact(ExactMatrix::from_rows(rows)) == before;
}

bool sphere_algebra() {
  for (int r = 2; r <= 5; ++r) {
    auto basis = sphere_hol_basis(r);
    if (static_cast<int>(basis.size()) != (r + 1) * (r + 1) - 1) return false;
    auto rho = sphere_defining(r);
    for (const auto& xi : basis)
      if (!tangent_to(xi, rho)) return false;
  }
  return true;
}

bool catalog_validity() {
  for (int r = 2; r <= 3; ++r) {
    auto cat = tube_catalog(r);
    if (static_cast<int>(cat.size()) != r + 2) return false;
    for (const auto& spec : cat) {
      auto rep = validate_subalgebra(spec.subalgebra.ambient, spec.subalgebra, spec.basePoint);
      if (!rep.abelian || !rep.totallyReal || !rep.spansTangent || !rep.involutionFound) return false;
      if (rep.involutionFound->residual > 1e-9 || rep.antiTangentDim != r || !rep.conditionIII) return false;
    }
  }
  return true;
}

bool covering_residuals() {
  for (int r = 2; r <= 3; ++r)
    for (const auto& spec : tube_catalog(r)) {
      auto rep = verify_covering(spec, spec.target, 1000, 1e-9);
      if (rep.samples != 1000 || !(rep.maxResidual <= 1e-9)) return false;
    }
  return true;
}

bool field_correspondence() {
  for (const auto& spec : tube_catalog(2))
    for (int k = 0; k < 2; ++k) {
      CVector dir(2, 0.0);
      dir[k] = cplx(0, 1);
      if (!(check_field_correspondence(spec, dir, spec.subalgebra.basis[k], 1000, 1e-9).maxResidual <= 1e-9)) return false;
    }
  return true;
}

bool equivalence_separation() {
  for (int r = 2; r <= 3; ++r) {
    std::set<InvariantSignature> seen;
    for (const auto& spec : tube_catalog(r)) {
      auto sig = conjugacy_invariants(spec.subalgebra);
      if (spec.caseTag == TubeCase::parabolic && sig.dimNilpotent != r - spec.s + 1) return false;
      if (spec.caseTag != TubeCase::parabolic && sig.dimNilpotent != 0) return false;
      seen.insert(sig);
    }
    if (static_cast<int>(seen.size()) != r + 2) return false;
  }
  return true;
}

bool affine_homogeneity_check() {
  for (int r = 2; r <= 3; ++r) {
    auto cat = tube_catalog(r);
    if (affine_homogeneity(cat[0], 200, 1e-9)) return false;
    if (!affine_homogeneity(cat[2], 200, 1e-9)) return false;
  }
  return true;
}

bool involution_table() {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {2, 4}}) {
    const int n = p + q;
    auto su = su_basis(p, q);
    auto form = signature_form(p, q);
    struct Want {
      InvolutionKind kind;
      bool admissible;
      int eps, delta;
    };
    for (const Want& w : {Want{InvolutionKind::I, true, 1, 1}, Want{InvolutionKind::II, p == q, 1, -1},
                          Want{InvolutionKind::III, p % 2 == 0 && q % 2 == 0, -1, 1}, Want{InvolutionKind::IV, p == q, -1, -1}}) {
      if (involution_admissible(w.kind, p, q) != w.admissible) return false;
      if (!w.admissible) continue;
      auto tau = involution(w.kind, p, q);
      if (tau.eps != w.eps || tau.delta != w.delta) return false;
      auto ids = verify_involution(tau);
      if (!ids.squareIsEps || !ids.formScalesByDelta) return false;
      // matrix form of the same identities
      if (tau.tauTilde.conjugate() * tau.tauTilde != GaussRational(w.eps) * ExactMatrix::identity(n)) return false;
      if ((tau.tauTilde * form.J * tau.tauTilde.adjoint()).conjugate() != GaussRational(w.delta) * form.J) return false;
      if (w.kind == InvolutionKind::I) {
        auto fixed = fixed_subalgebra(su, tau, 1);
        if (static_cast<int>(fixed.size()) != n * (n - 1) / 2) return false;
        for (const auto& x : fixed)
          if (induced_action(tau, x) != x) return false;
      }
    }
  }
  return true;
}

bool levi_chains() {
  ConeSpec cone{2, 1, 0};
  auto tube = levi_chain(cone_tube_germ(cone, 5), 3);
  if (tube.dims.size() < 3 || tube.dims[1] != 1 || tube.dims[2] != 0) return false;
  ExactMatrix corner(2, 2);
  corner(0, 0) = 1;
  ExactVector z11 = cone_chart_coordinates(corner, cone);
  ExactVector h1 = tube.kernels[1][0];
  for (size_t i = z11.size(); i < h1.size(); ++i)
    if (!h1[i].is_zero()) return false;
  h1.resize(z11.size());
  if (!in_span_of({z11}, h1)) return false;

  auto model = siegel_model(2, 3, 1, 0);
  auto sigma = levi_chain(siegel_germ(model, 5), 3);
  if (sigma.dims[1] == 0 || sigma.dims[2] != 0) return false;
  auto split = siegel_split(model, 2);
  if (split.empty() || !split[0].w0IsW || static_cast<int>(split[0].wKernel.size()) != model.dimW()) return false;
  for (const auto& lvl : split)
    if (!lvl.directSum || !lvl.fInclusion || !lvl.recursion) return false;
  return true;
}

bool nilpotency() {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}}) {
    auto n = siegel_nilpotent_basis(siegel_model(p, q, 1, 0));
    for (const auto& x : n.basis)
      for (const auto& y : n.basis) {
        auto xy = bracket(x, y);
        for (const auto& z : n.basis)
          if (!bracket(xy, z).is_zero()) return false;
      }
  }
  return true;
}

bool finite_type_check() {
  auto y = [](int k, int i) { return MPoly::variable(k, 0, i); };
  auto agrees = [](const GraphGerm& g, std::mt19937_64& rng) {
    auto res = finite_type(g);
    int span = oracle::graph_affine_span_dim(g.k, g.f, rng);
    if (res.verdict == Verdict::inconclusive) return false;
    return (res.verdict == Verdict::yes) == (span == g.n);
  };
  std::mt19937_64 rng(1001);
  GraphGerm paraboloid{1, 2, {y(1, 0) * y(1, 0)}, 3};
  GraphGerm flat{1, 2, {MPoly(1, 0)}, 3};
  GraphGerm cylinder{1, 3, {MPoly(1, 0), y(1, 0) * y(1, 0)}, 3};
  if (finite_type(paraboloid).verdict != Verdict::yes || finite_type(paraboloid).order != 1) return false;
  if (finite_type(flat).verdict != Verdict::no || finite_type(cylinder).verdict != Verdict::no) return false;
  for (const auto* g : {&paraboloid, &flat, &cylinder})
    if (!agrees(*g, rng)) return false;
  std::uniform_int_distribution<int> coef(-3, 3), deg(2, 3), nterms(1, 3);
  for (int t = 0; t < 30; ++t) {
    const int k = 1 + t % 3, c = 1 + (t / 3) % 3;
    std::vector<MPoly> f;
    for (int j = 0; j < c; ++j) {
      MPoly fj(k, 0);
      for (int s = nterms(rng); s > 0; --s) {
        Exponent e(k, 0);
        for (int u = deg(rng); u > 0; --u) ++e[std::uniform_int_distribution<int>(0, k - 1)(rng)];
        fj.add_term(e, GaussRational(coef(rng)));
      }
      f.push_back(fj);
    }
    if (t % 3 == 1 && c >= 2) f[c - 1] = f[0] + GaussRational(3) * f[c - 2];
    if (!agrees(GraphGerm{k, k + c, f, 3}, rng)) return false;
  }
  return true;
}

bool property_suites() {
  std::mt19937_64 rng(2002);
  for (int t = 0; t < 50; ++t) {
    int n = 2 + t % 2;
    auto x = oracle::rand_field(rng, n, 2), y = oracle::rand_field(rng, n, 2), z = oracle::rand_field(rng, n, 2);
    if (!(bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y)).is_zero()) return false;
  }
  for (int t = 0; t < 20; ++t) {
    MPoly p = oracle::rand_poly(rng, 2, 2, 3, 5), q = oracle::rand_poly(rng, 2, 2, 3, 5);
    for (int v = 0; v < 4; ++v)
      if (poly_diff(p * q, v) != poly_diff(p, v) * q + p * poly_diff(q, v)) return false;
  }
  for (int t = 0; t < 20; ++t) {
    int rows = 1 + t % 5, cols = 1 + (t / 5) % 5;
    ExactMatrix m = oracle::rand_matrix(rng, rows, cols);
    if (t % 2) {
      // duplicate a row to drop the rank
      for (int j = 0; j < cols && rows > 1; ++j) m(rows - 1, j) = m(0, j) * GaussRational(2L, 1L);
    }
    if (rank_exact(m) != rank_exact(m.transpose())) return false;
  }
  for (int t = 0; t < 20; ++t) {
    int len = 1 + t % 4, count = 1 + (t / 4) % 4;
    std::vector<ExactVector> s, doubled;
    for (int c = 0; c < count; ++c) {
      ExactVector v(len);
      for (auto& e : v) e = oracle::rand_gauss(rng);
      s.push_back(v);
    }
    if (count >= 2) s.back() = s.front();
    doubled = s;
    for (const auto& v : s) {
      ExactVector w(v.size());
      for (size_t i = 0; i < v.size(); ++i) w[i] = GaussRational::I() * v[i];
      doubled.push_back(w);
    }
    if (real_span_dim(doubled) != 2 * rank_exact(ExactMatrix::from_rows(s))) return false;
  }
  const double tol = 1e-9;
  std::uniform_real_distribution<double> u(-1, 1);
  for (const auto& spec : tube_catalog(2)) {
    CVector a = to_c(spec.basePoint);
    for (int t = 0; t < 50; ++t) {
      std::vector<double> c{u(rng), u(rng)};
      auto one = exp_point(spec.subalgebra, c, a, tol);
      auto fwd = exp_point_ordered(spec.subalgebra, c, a, tol, {0, 1});
      auto bwd = exp_point_ordered(spec.subalgebra, c, a, tol, {1, 0});
      if (oracle::max_abs_diff(fwd, bwd) > 10 * tol || oracle::max_abs_diff(one, fwd) > 10 * tol) return false;
    }
  }
  return true;
}

} // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool()> run;
  };
  const std::vector<Criterion> criteria{
      {"sphere algebra size and exact tangency, r = 2..5", sphere_algebra},
      {"catalog validity with involution, r = 2, 3", catalog_validity},
      {"covering residuals <= 1e-9, 1000 samples, r = 2, 3", covering_residuals},
      {"field correspondence <= 1e-9, r = 2", field_correspondence},
      {"invariant signatures pairwise distinct, r = 2, 3", equivalence_separation},
      {"affine homogeneity: paraboloid yes, exp no", affine_homogeneity_check},
      {"involution table and identities", involution_table},
      {"levi chains and kernel split", levi_chains},
      {"siegel nilpotent algebra is two-step", nilpotency},
      {"finite type agrees with affine-span oracle", finite_type_check},
      {"property suites", property_suites},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
      ok = criteria[i].run();
    } catch (const std::exception& e) {
      err = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs, err.empty() ? "" : ": ",
                err.c_str());
    failed += !ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
