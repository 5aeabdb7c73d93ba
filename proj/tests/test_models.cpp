#include "oracles.hpp"

#include "crtube/models.hpp"

#include <doctest.h>

#include <map>

using namespace crtube;
using oracle::cplx;
using oracle::rand_gauss;
using oracle::rand_matrix;

namespace {

struct TypeRow {
  bool admissible;
  int eps;
  int delta;
};

// Admissibility and (eps, delta) of the four involution types.
TypeRow expected_row(InvolutionKind k, int p, int q) {
  switch (k) {
  case InvolutionKind::I: return {true, 1, 1};
  case InvolutionKind::II: return {p == q, 1, -1};
  case InvolutionKind::III: return {p % 2 == 0 && q % 2 == 0, -1, 1};
  case InvolutionKind::IV: return {p == q, -1, -1};
  }
  return {};
}

ExactMatrix mat_unit(int n, int i, int j, GaussRational c = GaussRational(1)) {
  ExactMatrix m(n, n);
  m(i, j) = c;
  return m;
}

} // namespace

TEST_CASE("cayley matrix maps the sphere onto the quadric") {
  for (int r = 2; r <= 4; ++r) {
    ExactMatrix c = cayley_matrix(r);
    ExactMatrix sq = c * cayley_square_weight(r) * c;
    // a scaled signed permutation: one nonzero per row and column
    for (int i = 0; i <= r; ++i) {
      int nz = 0, nzc = 0;
      for (int j = 0; j <= r; ++j) {
        nz += !sq(i, j).is_zero();
        nzc += !sq(j, i).is_zero();
      }
      CHECK(nz == 1);
      CHECK(nzc == 1);
    }
    auto amb = cayley_ambient(r);
    CHECK(static_cast<int>(amb.size()) == (r + 1) * (r + 1) - 1);
    auto rho = quadric_defining(1, r);
    for (const auto& xi : amb) CHECK(tangent_to(xi, rho));
  }
  // numeric: image of random sphere points satisfies 2 Re w1 = sum_{j>1} |w_j|^2
  std::mt19937_64 rng(31);
  std::normal_distribution<double> nd;
  Eigen::MatrixXcd c = oracle::to_eigen(cayley_matrix(3));
  for (int t = 0; t < 20; ++t) {
    Eigen::VectorXcd z(4);
    z(0) = 1.0;
    double n = 0;
    for (int k = 1; k < 4; ++k) {
      z(k) = cplx(nd(rng), nd(rng));
      n += std::norm(z(k));
    }
    for (int k = 1; k < 4; ++k) z(k) /= std::sqrt(n);
    Eigen::VectorXcd w = c * z;
    std::vector<cplx> hom(w.data(), w.data() + w.size());
    auto a = oracle::dehomogenize(hom);
    double lhs = 2 * a[0].real(), rhs = std::norm(a[1]) + std::norm(a[2]);
    CHECK(std::abs(lhs - rhs) < 1e-9 * (1 + std::abs(lhs)));
  }
}

TEST_CASE("sphere base point is rational and on the sphere") {
  for (int r = 2; r <= 6; ++r) {
    auto a = sphere_base_point(r);
    REQUIRE(static_cast<int>(a.size()) == r);
    GaussRational s(0);
    for (const auto& x : a) {
      CHECK_FALSE(x.is_zero());
      s += x * x.conj();
    }
    CHECK(s == GaussRational(1));
  }
}

TEST_CASE("catalog structure") {
  for (int r = 2; r <= 4; ++r) {
    auto cat = tube_catalog(r);
    REQUIRE(static_cast<int>(cat.size()) == r + 2);
    CHECK(cat[0].caseTag == TubeCase::exp);
    CHECK(cat[1].caseTag == TubeCase::trig);
    for (int s = 1; s <= r; ++s) {
      CHECK(cat[s + 1].caseTag == TubeCase::parabolic);
      CHECK(cat[s + 1].s == s);
    }
    for (const auto& c : cat) {
      CHECK(static_cast<int>(c.subalgebra.basis.size()) == r);
      for (const auto& xi : c.subalgebra.basis) CHECK(tangent_to(xi, c.target));
      for (const auto& xi : c.subalgebra.basis) CHECK(in_real_span(c.subalgebra.ambient, xi));
      // the exact base point satisfies the target equation
      std::vector<GaussRational> a = c.basePoint;
      CHECK(c.target.rho().evaluate(a).is_zero());
    }
  }
}

TEST_CASE("parabolic family dimension of the nilpotent part") {
  for (int r = 2; r <= 4; ++r)
    for (int s = 1; s <= r; ++s) {
      auto f = sphere_parabolic_family(r, s);
      CHECK(is_abelian(f));
      CHECK(totally_real(f));
    }
  CHECK_THROWS(sphere_parabolic_family(2, 0));
  CHECK_THROWS(sphere_parabolic_family(2, 3));
}

TEST_CASE("cartan subalgebras") {
  for (int r = 2; r <= 4; ++r)
    for (auto kind : {CartanKind::split, CartanKind::compact}) {
      auto h = sphere_cartan(r, kind);
      CHECK(static_cast<int>(h.basis.size()) == r);
      CHECK(is_abelian(h));
      CHECK(totally_real(h));
      for (const auto& xi : h.basis) CHECK(tangent_to(xi, sphere_defining(r)));
    }
}

TEST_CASE("involution table") {
  const std::vector<std::pair<int, int>> pairs{{1, 2}, {2, 2}, {2, 3}, {2, 4}};
  for (auto [p, q] : pairs) {
    const int n = p + q;
    auto su = su_basis(p, q);
    CHECK(static_cast<int>(su.size()) == n * n - 1);
    CHECK(real_span_dim([&] {
            std::vector<ExactVector> v;
            for (const auto& x : su) {
              ExactVector f;
              for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) f.push_back(x(i, j));
              v.push_back(f);
            }
            return v;
          }()) == n * n - 1);
    auto form = signature_form(p, q);
    for (const auto& x : su) CHECK(in_su(x, form.J));
    for (auto kind : {InvolutionKind::I, InvolutionKind::II, InvolutionKind::III, InvolutionKind::IV}) {
      TypeRow want = expected_row(kind, p, q);
      CAPTURE(p);
      CAPTURE(q);
      CAPTURE(to_string(kind));
      CHECK(involution_admissible(kind, p, q) == want.admissible);
      if (!want.admissible) {
        CHECK_THROWS_AS(involution(kind, p, q), std::invalid_argument);
        continue;
      }
      auto tau = involution(kind, p, q);
      CHECK(tau.eps == want.eps);
      CHECK(tau.delta == want.delta);
      // tau~ squared as a matrix: conj(conj(z) T) T = z conj(T) T
      CHECK(tau.tauTilde.conjugate() * tau.tauTilde == GaussRational(want.eps) * ExactMatrix::identity(n));
      // hermitian form h(z) = z J z^*: h(conj(z) T) = delta h(z) iff T^* ... conj(T J T^*) = delta J
      CHECK((tau.tauTilde * form.J * tau.tauTilde.adjoint()).conjugate() == GaussRational(want.delta) * form.J);
      auto ids = verify_involution(tau);
      CHECK(ids.squareIsEps);
      CHECK(ids.formScalesByDelta);

      auto plus = fixed_subalgebra(su, tau, 1), minus = fixed_subalgebra(su, tau, -1);
      for (const auto& x : plus) {
        CHECK(induced_action(tau, x) == x);
        CHECK(in_su(x, form.J));
      }
      for (const auto& x : minus) CHECK(induced_action(tau, x) == GaussRational(-1) * x);
      CHECK(static_cast<int>(plus.size() + minus.size()) == n * n - 1);
      if (kind == InvolutionKind::I) CHECK(static_cast<int>(plus.size()) == n * (n - 1) / 2);
    }
  }
}

TEST_CASE("fixed subalgebra of conjugation on the sphere algebra") {
  for (int r = 2; r <= 3; ++r) {
    SubalgebraSpec g{sphere_hol_basis(r), sphere_hol_basis(r), "hol"};
    AntiAffineMap conj{ExactMatrix::identity(r), ExactVector(r)};
    auto plus = fixed_subalgebra(g, conj, 1), minus = fixed_subalgebra(g, conj, -1);
    CHECK(static_cast<int>(plus.basis.size()) == r * (r + 1) / 2);
    CHECK(static_cast<int>(plus.basis.size() + minus.basis.size()) == (r + 1) * (r + 1) - 1);
    for (const auto& xi : plus.basis) CHECK(pushforward_antiholomorphic(conj, xi) == xi);
    for (const auto& xi : minus.basis) CHECK(pushforward_antiholomorphic(conj, xi) == GaussRational(-1) * xi);
  }
}

TEST_CASE("cone membership agrees with floating-point eigenvalues") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 40; ++t) {
    int p = std::uniform_int_distribution<int>(1, 4)(rng);
    ExactMatrix a = rand_matrix(rng, p, p, -2, 2);
    ExactMatrix h = a + a.adjoint();
    if (t % 3 == 0) h = a * a.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(oracle::to_eigen(h));
    int j = 0, k = 0;
    for (int i = 0; i < p; ++i) {
      j += es.eigenvalues()(i) > 1e-9;
      k += es.eigenvalues()(i) < -1e-9;
    }
    CHECK(cone_membership(ConeSpec{p, j, k}, h));
    if (j + k < p) CHECK_FALSE(cone_membership(ConeSpec{p, j + 1, k}, h));
  }
  CHECK_THROWS(cone_membership(ConeSpec{2, 1, 0}, mat_unit(2, 0, 1)));
}

TEST_CASE("hermitian coordinates reconstruct matrices") {
  std::mt19937_64 rng(33);
  for (int p = 1; p <= 3; ++p) {
    auto b = hermitian_basis(p);
    CHECK(static_cast<int>(b.size()) == p * p);
    for (const auto& x : b) CHECK(x == x.adjoint());
    ExactMatrix m = rand_matrix(rng, p, p);
    auto c = hermitian_coordinates(m);
    ExactMatrix back(p, p);
    for (size_t i = 0; i < b.size(); ++i) back += c[i] * b[i];
    CHECK(back == m);
    // hermitian input has real coordinates
    for (const auto& x : hermitian_coordinates(m + m.adjoint())) CHECK(x.is_real());
  }
}

TEST_CASE("siegel nilpotent algebra is two-step") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {1, 3}, {2, 4}}) {
    auto model = siegel_model(p, q, 1, 0);
    auto n = siegel_nilpotent_basis(model);
    CHECK(static_cast<int>(n.basis.size()) == p * p + 2 * p * (q - p));
    for (const auto& x : n.basis)
      for (const auto& y : n.basis) {
        auto xy = bracket(x, y);
        if (xy.is_zero()) continue;
        for (const auto& z : n.basis) CHECK(bracket(xy, z).is_zero());
      }
  }
}

TEST_CASE("siegel bracket of two w-translations") {
  // [X_c1, X_c2] = v d/dz with v = 2i (c1 c2^* - c2 c1^*)
  std::mt19937_64 rng(34);
  auto model = siegel_model(2, 3, 1, 0);
  for (int t = 0; t < 10; ++t) {
    ExactMatrix c1 = rand_matrix(rng, 2, 1), c2 = rand_matrix(rng, 2, 1);
    ExactMatrix zero2(2, 2), zero21(2, 1);
    auto lhs = bracket(siegel_nilpotent_field(model, zero2, c1), siegel_nilpotent_field(model, zero2, c2));
    ExactMatrix v = GaussRational(0L, 2L) * (model.F(c1, c2) - model.F(c2, c1));
    CHECK(v == v.adjoint());
    CHECK(lhs == siegel_nilpotent_field(model, v, zero21));
  }
  CHECK_THROWS(siegel_model(2, 2, 1, 0));
  CHECK_THROWS(siegel_model(2, 3, 2, 1));
}
