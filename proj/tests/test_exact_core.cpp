#include "oracles.hpp"

#include "crtube/exact_matrix.hpp"
#include "crtube/gauss_rational.hpp"
#include "crtube/mpoly.hpp"

#include <doctest.h>

using namespace crtube;
using oracle::rand_gauss;
using oracle::rand_matrix;
using oracle::rand_poly;

TEST_CASE("gauss rational field operations") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    GaussRational a = rand_gauss(rng), b = rand_gauss(rng), c = rand_gauss(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(GaussRational(a.norm()) == a * a.conj());
    if (!b.is_zero()) {
      CHECK((a / b) * b == a);
      CHECK(b * b.inverse() == GaussRational(1));
    }
  }
  CHECK(GaussRational::I() * GaussRational::I() == GaussRational(-1));
  CHECK(GaussRational::frac(6, 4) == GaussRational(mpq_class(3, 2)));
  CHECK_THROWS(GaussRational(0).inverse());
  CHECK(GaussRational(mpq_class(1, 3), mpq_class(-2)).to_complex() == std::complex<double>(1.0 / 3.0, -2.0));
}

TEST_CASE("mpoly product rule") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 40; ++t) {
    MPoly p = rand_poly(rng, 3, 3, 3, 5), q = rand_poly(rng, 3, 3, 3, 5);
    for (int v = 0; v < 6; ++v) CHECK(poly_diff(p * q, v) == poly_diff(p, v) * q + p * poly_diff(q, v));
  }
}

TEST_CASE("mpoly evaluation is a ring homomorphism") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    MPoly p = rand_poly(rng, 2, 2, 3, 4), q = rand_poly(rng, 2, 2, 3, 4);
    std::vector<GaussRational> z{rand_gauss(rng), rand_gauss(rng)};
    CHECK((p * q).evaluate(z) == p.evaluate(z) * q.evaluate(z));
    CHECK((p + q).evaluate(z) == p.evaluate(z) + q.evaluate(z));
    // conjugate variables read the conjugated coordinates
    CHECK(p.conj_swap().evaluate(z) == p.evaluate(z).conj());
    CHECK(pow(p, 3).evaluate(z) == p.evaluate(z) * p.evaluate(z) * p.evaluate(z));
  }
}

TEST_CASE("mpoly composition and division") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 20; ++t) {
    MPoly p = rand_poly(rng, 2, 0, 3, 4);
    std::vector<MPoly> subs{rand_poly(rng, 3, 0, 2, 3), rand_poly(rng, 3, 0, 2, 3)};
    std::vector<GaussRational> z{rand_gauss(rng), rand_gauss(rng), rand_gauss(rng)};
    std::vector<GaussRational> inner{subs[0].evaluate(z), subs[1].evaluate(z)};
    CHECK(compose(p, subs).evaluate(z) == p.evaluate(inner));

    MPoly a = rand_poly(rng, 2, 0, 4, 6), b = rand_poly(rng, 2, 0, 2, 3);
    if (b.is_zero()) continue;
    auto [quo, rem] = divide(a, b);
    CHECK(quo * b + rem == a);
  }
  MPoly x = MPoly::variable(2, 0, 0), y = MPoly::variable(2, 0, 1);
  auto [quo, rem] = divide(x * x - y * y, x - y);
  CHECK(quo == x + y);
  CHECK(rem.is_zero());
}

TEST_CASE("mpoly reality and truncation") {
  MPoly z = MPoly::variable(1, 1, 0), zb = MPoly::variable(1, 1, 1);
  CHECK((z * zb).is_real());
  CHECK_FALSE((GaussRational::I() * z * zb).is_real());
  CHECK((z + zb).is_real());
  CHECK(z.is_holomorphic());
  CHECK_FALSE(zb.is_holomorphic());
  MPoly p = z + z * z + z * z * z;
  CHECK(p.truncate(2) == z + z * z);
  CHECK(p.total_degree() == 3);
  CHECK(MPoly(1, 1).total_degree() == -1);
  CHECK_THROWS((MPoly(2, 0) + MPoly(3, 0)));
}

TEST_CASE("rank of constructed low-rank products and transposes") {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 40; ++t) {
    std::uniform_int_distribution<int> dim(1, 6);
    int rows = dim(rng), cols = dim(rng), k = std::uniform_int_distribution<int>(0, std::min(rows, cols))(rng);
    // A (rows x k) B (k x cols) with A, B of full rank k: lower-unitriangular blocks keep the rank exact
    ExactMatrix a = rand_matrix(rng, rows, k), b = rand_matrix(rng, k, cols);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        a(i, j) = i == j ? GaussRational(1) : (j > i ? GaussRational(0) : a(i, j));
        b(i, j) = i == j ? GaussRational(1) : (j < i ? GaussRational(0) : b(i, j));
      }
    }
    ExactMatrix m = k == 0 ? ExactMatrix(rows, cols) : a * b;
    CHECK(rank_exact(m) == k);
    CHECK(rank_exact(m.transpose()) == k);
    CHECK(rank_exact(m.adjoint()) == k);
    auto ns = nullspace(m);
    CHECK(static_cast<int>(ns.size()) == cols - k);
    for (const auto& v : ns) {
      ExactMatrix col = ExactMatrix::from_columns({v});
      CHECK((m * col).is_zero());
    }
  }
}

TEST_CASE("inverse and solve") {
  std::mt19937_64 rng(16);
  int done = 0;
  while (done < 20) {
    ExactMatrix m = rand_matrix(rng, 4, 4);
    if (rank_exact(m) < 4) {
      CHECK_THROWS(inverse(m));
      continue;
    }
    ++done;
    CHECK(m * inverse(m) == ExactMatrix::identity(4));
    ExactVector b{rand_gauss(rng), rand_gauss(rng), rand_gauss(rng), rand_gauss(rng)};
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m * ExactMatrix::from_columns({*x}) == ExactMatrix::from_columns({b}));
  }
  ExactMatrix sing(2, 2);
  sing(0, 0) = 1;
  CHECK_FALSE(solve(sing, ExactVector{GaussRational(0), GaussRational(1)}).has_value());
}

TEST_CASE("real span dimension doubles on S plus i S") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    std::uniform_int_distribution<int> dim(1, 5);
    int len = dim(rng), count = dim(rng), k = std::uniform_int_distribution<int>(1, std::min(len, count))(rng);
    // count vectors inside a random k-dimensional complex subspace, first k of them the spanning set
    ExactMatrix basis = rand_matrix(rng, k, len);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) basis(i, j) = i == j ? GaussRational(1) : GaussRational(0);
    std::vector<ExactVector> s;
    for (int c = 0; c < count; ++c) {
      ExactVector coeff(k);
      for (auto& x : coeff) x = rand_gauss(rng);
      if (c < k) {
        std::fill(coeff.begin(), coeff.end(), GaussRational(0));
        coeff[c] = 1;
      }
      s.push_back(coeff * basis);
    }
    int complexRank = rank_exact(ExactMatrix::from_rows(s));
    CHECK(complexRank == k);
    std::vector<ExactVector> doubled = s;
    for (const auto& v : s) {
      ExactVector w(v.size());
      for (size_t i = 0; i < v.size(); ++i) w[i] = GaussRational::I() * v[i];
      doubled.push_back(w);
    }
    CHECK(real_span_dim(doubled) == 2 * complexRank);
  }
  // a real vector and its i-multiple are R-independent but C-dependent
  CHECK(real_span_dim({ExactVector{GaussRational(1)}, ExactVector{GaussRational::I()}}) == 2);
  CHECK(real_span_dim({ExactVector{GaussRational(1)}, ExactVector{GaussRational(2)}}) == 1);
}

TEST_CASE("hermitian inertia agrees with floating-point eigenvalues") {
  std::mt19937_64 rng(18);
  for (int t = 0; t < 30; ++t) {
    int n = std::uniform_int_distribution<int>(1, 5)(rng);
    // h = a D a^* with D a random signed diagonal gives prescribed inertia when a is invertible
    ExactMatrix a = rand_matrix(rng, n, n);
    if (rank_exact(a) < n) continue;
    ExactMatrix d(n, n);
    int pos = 0, neg = 0;
    for (int i = 0; i < n; ++i) {
      int s = std::uniform_int_distribution<int>(-1, 1)(rng);
      d(i, i) = s;
      pos += s > 0;
      neg += s < 0;
    }
    ExactMatrix h = a * d * a.adjoint();
    auto [p, q] = hermitian_inertia(h);
    CHECK(p == pos);
    CHECK(q == neg);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(oracle::to_eigen(h));
    const auto& ev = es.eigenvalues();
    double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    int ep = 0, en = 0;
    for (int i = 0; i < n; ++i) {
      ep += ev(i) > 1e-9 * scale;
      en += ev(i) < -1e-9 * scale;
    }
    CHECK(ep == pos);
    CHECK(en == neg);
  }
  ExactMatrix nh(2, 2);
  nh(0, 1) = 1;
  CHECK_THROWS(hermitian_inertia(nh));
}

TEST_CASE("matrix algebra identities") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 20; ++t) {
    ExactMatrix a = rand_matrix(rng, 3, 3), b = rand_matrix(rng, 3, 3), c = rand_matrix(rng, 3, 3);
    CHECK((a * b).adjoint() == b.adjoint() * a.adjoint());
    CHECK(commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b)) ==
          ExactMatrix(3, 3));
    CHECK(commutator(a, b).trace() == GaussRational(0));
  }
}
