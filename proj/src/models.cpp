#include "crtube/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace crtube {

namespace {

MPoly zvar(int n, int k) { return MPoly::variable(n, 0, k); }

/// Real coordinates of each image in the basis, plus a check that the operator squares to the identity.
ExactMatrix real_operator_matrix(const std::vector<ExactVector>& basis, const std::vector<ExactVector>& images) {
  const int d = static_cast<int>(basis.size());
  ExactMatrix cols = realify(basis).transpose();
  ExactMatrix op(d, d);
  for (int i = 0; i < d; ++i) {
    ExactMatrix t = realify({images[i]}).transpose();
    auto sol = solve(cols, t.col(0));
    if (!sol) throw std::invalid_argument("fixed_subalgebra: image leaves the span");
    for (int k = 0; k < d; ++k) op(k, i) = GaussRational((*sol)[k].re);
  }
  return op;
}

std::vector<ExactVector> eigen_combinations(const ExactMatrix& op, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("fixed_subalgebra: sign must be +1 or -1");
  const int d = op.rows();
  if (op * op != ExactMatrix::identity(d)) throw std::invalid_argument("fixed_subalgebra: operator is not involutive");
  return nullspace(op - GaussRational(sign) * ExactMatrix::identity(d));
}

ExactVector flatten(const ExactMatrix& m) {
  ExactVector v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

ExactMatrix block_j(int d) {
  ExactMatrix m(2 * d, 2 * d);
  for (int k = 0; k < d; ++k) {
    m(k, d + k) = GaussRational(1);
    m(d + k, k) = GaussRational(-1);
  }
  return m;
}

} // namespace

// ---- sphere ----

std::vector<PolyVectorField> sphere_hol_basis(int r) {
  if (r < 2) throw std::invalid_argument("sphere_hol_basis: r must be at least 2");
  const GaussRational I = GaussRational::I();
  std::vector<PolyVectorField> out;
  std::vector<MPoly> z;
  for (int k = 0; k < r; ++k) z.push_back(zvar(r, k));
  for (int k = 0; k < r; ++k)
    for (const GaussRational& s : {GaussRational(1), I}) {
      // alpha = s e_k, (z|alpha) = conj(s) z_k
      std::vector<MPoly> comps;
      MPoly za = s.conj() * z[k];
      for (int m = 0; m < r; ++m) {
        MPoly f = MPoly::constant(r, 0, m == k ? s : GaussRational());
        f -= za * z[m];
        comps.push_back(std::move(f));
      }
      out.emplace_back(std::move(comps));
    }
  for (int k = 0; k < r; ++k) out.push_back(PolyVectorField::linear(r, k, k, I));
  for (int k = 0; k < r; ++k)
    for (int l = k + 1; l < r; ++l) {
      out.push_back(PolyVectorField::linear(r, k, l) - PolyVectorField::linear(r, l, k));
      out.push_back(PolyVectorField::linear(r, k, l, I) + PolyVectorField::linear(r, l, k, I));
    }
  return out;
}

RealDefining sphere_defining(int r) {
  MPoly rho = MPoly::constant(r, r, GaussRational(-1));
  for (int k = 0; k < r; ++k) rho += MPoly::variable(r, r, k) * MPoly::variable(r, r, r + k);
  return RealDefining(rho);
}

ExactMatrix cayley_matrix(int r) {
  if (r < 2) throw std::invalid_argument("cayley_matrix: r must be at least 2");
  ExactMatrix c(r + 1, r + 1);
  c(0, 0) = GaussRational(1);
  c(0, 1) = GaussRational(-1);
  c(1, 0) = GaussRational(2);
  c(1, 1) = GaussRational(2);
  for (int k = 2; k <= r; ++k) c(k, k) = GaussRational(2);
  return c;
}

ExactMatrix cayley_square_weight(int r) {
  ExactMatrix k = ExactMatrix::identity(r + 1);
  k(0, 0) = GaussRational(2);
  return k;
}

RealDefining quadric_defining(int p, int q) {
  if (p < 1 || q < 1 || p + q < 3) throw std::invalid_argument("quadric_defining: need p, q >= 1 and p + q = r + 1 with r >= 2");
  const int r = p + q - 1;
  MPoly rho = MPoly::variable(r, r, 0) + MPoly::variable(r, r, r);
  for (int j = 1; j < r; ++j) {
    // 1-based index j+1; eps = -1 for j+1 <= p
    GaussRational eps = (j + 1 <= p) ? GaussRational(-1) : GaussRational(1);
    rho -= eps * (MPoly::variable(r, r, j) * MPoly::variable(r, r, r + j));
  }
  return RealDefining(rho);
}

std::vector<PolyVectorField> cayley_ambient(int r) {
  ExactMatrix c = cayley_matrix(r);
  std::vector<PolyVectorField> out;
  for (const auto& f : sphere_hol_basis(r)) out.push_back(pushforward_projective(c, f));
  return out;
}

SubalgebraSpec sphere_cartan(int r, CartanKind kind) {
  SubalgebraSpec v;
  v.ambient = sphere_hol_basis(r);
  const GaussRational I = GaussRational::I();
  if (kind == CartanKind::split) {
    for (int k = 0; k < r; ++k) v.basis.push_back(PolyVectorField::linear(r, k, k, I));
    v.label = "split Cartan (alpha = 0)";
  } else {
    // alpha = i e1: alpha - (z|alpha) z = i e1 + i z1 z
    std::vector<MPoly> comps;
    for (int m = 0; m < r; ++m) {
      MPoly f = MPoly::constant(r, 0, m == 0 ? I : GaussRational());
      f += I * (zvar(r, 0) * zvar(r, m));
      comps.push_back(std::move(f));
    }
    v.basis.emplace_back(std::move(comps));
    for (int k = 1; k < r; ++k) v.basis.push_back(PolyVectorField::linear(r, k, k, I));
    v.label = "compact Cartan (alpha = i e1)";
  }
  return v;
}

SubalgebraSpec sphere_parabolic_family(int r, int s) {
  if (r < 2) throw std::invalid_argument("sphere_parabolic_family: r must be at least 2");
  if (s < 1 || s > r) throw std::invalid_argument("sphere_parabolic_family: s out of range");
  const GaussRational I = GaussRational::I();
  SubalgebraSpec v;
  v.ambient = cayley_ambient(r);
  ExactVector e1(r);
  e1[0] = I;
  v.basis.push_back(PolyVectorField::constant(e1));
  for (int k = 1; k < s; ++k) v.basis.push_back(PolyVectorField::linear(r, k, k, I));
  for (int j = s; j < r; ++j) {
    ExactVector ej(r);
    ej[j] = I;
    v.basis.push_back(PolyVectorField::constant(ej) - PolyVectorField::linear(r, j, 0, I));
  }
  v.label = "parabolic family s=" + std::to_string(s);
  return v;
}

ExactVector sphere_base_point(int r) {
  ExactVector a{GaussRational(1)};
  while (static_cast<int>(a.size()) < r) {
    GaussRational c = a.back();
    a.back() = GaussRational::frac(3, 5) * c;
    a.push_back(GaussRational::frac(4, 5) * c);
  }
  return a;
}

// ---- tube catalog ----

std::vector<TubeRealizationSpec> tube_catalog(int r) {
  if (r < 2) throw std::invalid_argument("tube_catalog: r must be at least 2");
  std::vector<TubeRealizationSpec> out;
  auto z = [](int k) { return Expr::var(k); };
  auto c = [](double v) { return Expr::constant(v); };

  {
    CoveringMap phi;
    phi.homogeneous.push_back(c(1.0));
    Expr base = c(-1.0);
    for (int k = 0; k < r; ++k) {
      phi.homogeneous.push_back(exp(z(k)));
      base = base + exp(c(2.0) * z(k));
    }
    out.push_back(TubeRealizationSpec{TubeCase::exp, r, 0, "exp", phi, base, "sum_k exp(2 x_k) = 1", {}, "iR^r", -2.0, 2.0,
                                      sphere_cartan(r, CartanKind::split), sphere_defining(r), sphere_base_point(r)});
  }
  {
    CoveringMap phi;
    phi.homogeneous = {cos(z(0)), sin(z(0))};
    Expr base = c(2.0) * sin(z(0)) * sin(z(0)) - c(1.0);
    for (int k = 1; k < r; ++k) {
      phi.homogeneous.push_back(exp(z(k)));
      base = base + exp(c(2.0) * z(k));
    }
    const double q = std::numbers::pi / 4;
    out.push_back(TubeRealizationSpec{TubeCase::trig, r, 0, "trig", phi, base, "2 sin(x1)^2 + sum_{k>1} exp(2 x_k) = 1",
                                      {DomainConstraint{0, -q, q, "|x1| < pi/4"}}, "iR^r", -2.0, 2.0,
                                      sphere_cartan(r, CartanKind::compact), sphere_defining(r), sphere_base_point(r)});
  }
  for (int s = 1; s <= r; ++s) {
    CoveringMap phi;
    phi.homogeneous.push_back(c(1.0));
    Expr w1 = z(0);
    for (int j = s; j < r; ++j) w1 = w1 - c(0.5) * z(j) * z(j);
    phi.homogeneous.push_back(w1);
    Expr base = z(0);
    for (int k = 1; k < s; ++k) {
      phi.homogeneous.push_back(c(std::numbers::sqrt2) * exp(z(k)));
      base = base - exp(c(2.0) * z(k));
    }
    for (int j = s; j < r; ++j) {
      phi.homogeneous.push_back(z(j));
      base = base - z(j) * z(j);
    }
    ExactVector a(r);
    a[0] = GaussRational::frac(s - 1, 2);
    for (int k = 1; k < s; ++k) a[k] = GaussRational(1);
    std::string name = "parabolic-" + std::to_string(s);
    out.push_back(TubeRealizationSpec{TubeCase::parabolic, r, s, name, phi, base,
                                      "x1 = sum_{2<=j<=s} exp(2 x_j) + sum_{j>s} x_j^2", {}, "iR^r", -2.0, 2.0,
                                      sphere_parabolic_family(r, s), quadric_defining(1, r), a});
  }
  return out;
}

// ---- involutions ----

std::string to_string(InvolutionKind k) {
  switch (k) {
  case InvolutionKind::I: return "I";
  case InvolutionKind::II: return "II";
  case InvolutionKind::III: return "III";
  case InvolutionKind::IV: return "IV";
  }
  return "?";
}

SignatureForm signature_form(int p, int q) {
  if (p < 0 || q < 0 || p + q == 0) throw std::invalid_argument("signature_form: bad signature");
  ExactMatrix j(p + q, p + q);
  for (int k = 0; k < p + q; ++k) j(k, k) = GaussRational(k < p ? 1 : -1);
  return {p, q, j};
}

bool involution_admissible(InvolutionKind kind, int p, int q) {
  if (p < 1 || q < 1) return false;
  switch (kind) {
  case InvolutionKind::I: return true;
  case InvolutionKind::II: return p == q;
  case InvolutionKind::III: return p % 2 == 0 && q % 2 == 0;
  case InvolutionKind::IV: return p == q;
  }
  return false;
}

InvolutionSpec involution(InvolutionKind kind, int p, int q) {
  if (!involution_admissible(kind, p, q))
    throw std::invalid_argument("involution: type " + to_string(kind) + " is not admissible for (p,q) = (" + std::to_string(p) + "," +
                                std::to_string(q) + ")");
  const int n = p + q;
  ExactMatrix t(n, n);
  int eps = 1, delta = 1;
  switch (kind) {
  case InvolutionKind::I:
    t = ExactMatrix::identity(n);
    break;
  case InvolutionKind::II:
    for (int k = 0; k < p; ++k) {
      t(k, p + k) = GaussRational(1);
      t(p + k, k) = GaussRational(1);
    }
    delta = -1;
    break;
  case InvolutionKind::III: {
    ExactMatrix jp = block_j(p / 2), jq = block_j(q / 2);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) t(a, b) = jp(a, b);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) t(p + a, p + b) = jq(a, b);
    eps = -1;
    break;
  }
  case InvolutionKind::IV:
    t = block_j(p);
    eps = -1;
    delta = -1;
    break;
  }
  return {kind, p, q, eps, delta, t, signature_form(p, q)};
}

InvolutionIdentities verify_involution(const InvolutionSpec& tau) {
  const int n = tau.p + tau.q;
  const ExactMatrix& t = tau.tauTilde;
  // tau~(z)_k = sum_j conj(z_j) T_jk in the doubled ring
  std::vector<MPoly> img;
  for (int k = 0; k < n; ++k) {
    MPoly f(n, n);
    for (int j = 0; j < n; ++j)
      if (!t(j, k).is_zero()) f += t(j, k) * MPoly::variable(n, n, n + j);
    img.push_back(std::move(f));
  }
  bool square = true;
  for (int k = 0; k < n; ++k) {
    MPoly f(n, n);
    for (int j = 0; j < n; ++j)
      if (!t(j, k).is_zero()) f += t(j, k) * img[j].conj_swap();
    if (f != GaussRational(tau.eps) * MPoly::variable(n, n, k)) square = false;
  }
  auto h = [&](const std::vector<MPoly>& z) {
    MPoly s(n, n);
    for (int k = 0; k < n; ++k) s += tau.form.J(k, k) * (z[k] * z[k].conj_swap());
    return s;
  };
  std::vector<MPoly> id;
  for (int k = 0; k < n; ++k) id.push_back(MPoly::variable(n, n, k));
  bool form = h(img) == GaussRational(tau.delta) * h(id);
  return {square, form};
}

std::vector<ExactMatrix> su_basis(int p, int q) {
  const int n = p + q;
  SignatureForm f = signature_form(p, q);
  const GaussRational I = GaussRational::I();
  std::vector<ExactMatrix> out;
  for (int k = 0; k + 1 < n; ++k) {
    ExactMatrix d(n, n);
    d(k, k) = I;
    d(k + 1, k + 1) = -I;
    out.push_back(d);
  }
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      ExactMatrix a(n, n), b(n, n);
      a(k, l) = GaussRational(1);
      a(l, k) = GaussRational(-1);
      b(k, l) = I;
      b(l, k) = I;
      out.push_back(f.J * a);
      out.push_back(f.J * b);
    }
  return out;
}

bool in_su(const ExactMatrix& x, const ExactMatrix& J) {
  return x.trace().is_zero() && (x.adjoint() * J + J * x).is_zero();
}

ExactMatrix induced_action(const InvolutionSpec& tau, const ExactMatrix& x) {
  ExactMatrix t = tau.tauTilde.transpose();
  return t * x.conjugate() * inverse(t);
}

std::vector<ExactMatrix> fixed_subalgebra(const std::vector<ExactMatrix>& basis, const InvolutionSpec& tau, int sign) {
  std::vector<ExactVector> b, im;
  for (const auto& x : basis) {
    b.push_back(flatten(x));
    im.push_back(flatten(induced_action(tau, x)));
  }
  auto combos = eigen_combinations(real_operator_matrix(b, im), sign);
  std::vector<ExactMatrix> out;
  for (const auto& c : combos) {
    ExactMatrix m(basis[0].rows(), basis[0].cols());
    for (size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) m += c[i] * basis[i];
    out.push_back(std::move(m));
  }
  return out;
}

SubalgebraSpec fixed_subalgebra(const SubalgebraSpec& g, const AntiAffineMap& tau, int sign) {
  std::vector<PolyVectorField> all = g.basis;
  for (const auto& f : g.basis) all.push_back(pushforward_antiholomorphic(tau, f));
  auto cv = coefficient_vectors(all);
  const size_t d = g.basis.size();
  std::vector<ExactVector> b(cv.begin(), cv.begin() + static_cast<long>(d)), im(cv.begin() + static_cast<long>(d), cv.end());
  auto combos = eigen_combinations(real_operator_matrix(b, im), sign);
  SubalgebraSpec out;
  out.ambient = g.basis;
  out.label = g.label + (sign > 0 ? " (+1 eigenspace)" : " (-1 eigenspace)");
  for (const auto& c : combos) {
    PolyVectorField f = PolyVectorField::zero(g.basis[0].n());
    for (size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) f += c[i] * g.basis[i];
    out.basis.push_back(std::move(f));
  }
  return out;
}

// ---- cones and Siegel models ----

bool cone_membership(const ConeSpec& cone, const ExactMatrix& x) {
  if (x.rows() != cone.p || x.cols() != cone.p) throw std::invalid_argument("cone_membership: matrix size differs from p");
  auto [pos, neg] = hermitian_inertia(x);
  return pos == cone.j && neg == cone.k;
}

std::vector<ExactMatrix> hermitian_basis(int p) {
  std::vector<ExactMatrix> out;
  for (int r = 0; r < p; ++r) {
    ExactMatrix e(p, p);
    e(r, r) = GaussRational(1);
    out.push_back(e);
  }
  for (int r = 0; r < p; ++r)
    for (int s = r + 1; s < p; ++s) {
      ExactMatrix a(p, p), b(p, p);
      a(r, s) = a(s, r) = GaussRational(1);
      b(r, s) = GaussRational::I();
      b(s, r) = -GaussRational::I();
      out.push_back(a);
      out.push_back(b);
    }
  return out;
}

ExactVector hermitian_coordinates(const ExactMatrix& m) {
  const int p = m.rows();
  ExactVector c;
  for (int r = 0; r < p; ++r) c.push_back(m(r, r));
  const GaussRational half = GaussRational::frac(1, 2);
  const GaussRational twoI = GaussRational(0L, 2L);
  for (int r = 0; r < p; ++r)
    for (int s = r + 1; s < p; ++s) {
      c.push_back(half * (m(r, s) + m(s, r)));
      c.push_back((m(r, s) - m(s, r)) / twoI);
    }
  return c;
}

ExactMatrix SiegelModel::F(const ExactMatrix& w1, const ExactMatrix& w2) const { return w1 * w2.adjoint(); }

SiegelModel siegel_model(int p, int q, int j, int k) {
  if (p < 1 || q <= p) throw std::invalid_argument("siegel_model: need q > p >= 1");
  if (j < 0 || k < 0 || j + k > p) throw std::invalid_argument("siegel_model: need j, k >= 0 and j + k <= p");
  return {p, q, ConeSpec{p, j, k}};
}

PolyVectorField siegel_nilpotent_field(const SiegelModel& model, const ExactMatrix& v, const ExactMatrix& c) {
  const int p = model.p, m = model.q - model.p;
  const int nz = model.dimV(), n = nz + model.dimW();
  auto wvar = [&](int r, int col) { return MPoly::variable(n, 0, nz + r * m + col); };
  // entries of w c^*
  std::vector<std::vector<MPoly>> wc(p, std::vector<MPoly>(p, MPoly(n, 0)));
  for (int r = 0; r < p; ++r)
    for (int s = 0; s < p; ++s)
      for (int col = 0; col < m; ++col)
        if (!c(s, col).is_zero()) wc[r][s] += c(s, col).conj() * wvar(r, col);
  ExactVector vc = hermitian_coordinates(v);
  const GaussRational twoI(0L, 2L), half = GaussRational::frac(1, 2);
  std::vector<MPoly> comps;
  size_t b = 0;
  for (int r = 0; r < p; ++r, ++b) comps.push_back(twoI * wc[r][r] + MPoly::constant(n, 0, vc[b]));
  for (int r = 0; r < p; ++r)
    for (int s = r + 1; s < p; ++s) {
      comps.push_back(twoI * (half * (wc[r][s] + wc[s][r])) + MPoly::constant(n, 0, vc[b++]));
      comps.push_back(GaussRational(1) * (wc[r][s] - wc[s][r]) + MPoly::constant(n, 0, vc[b++]));
    }
  // the anti coordinate is (M_rs - M_sr)/(2i); times 2i gives M_rs - M_sr
  for (int r = 0; r < p; ++r)
    for (int col = 0; col < m; ++col) comps.push_back(MPoly::constant(n, 0, c(r, col)));
  return PolyVectorField(std::move(comps));
}

SubalgebraSpec siegel_nilpotent_basis(const SiegelModel& model) {
  const int p = model.p, m = model.q - model.p;
  SubalgebraSpec out;
  out.label = "nilpotent algebra of Sigma^{" + std::to_string(model.p) + "," + std::to_string(model.q) + "}";
  ExactMatrix zeroW(p, m), zeroV(p, p);
  for (const auto& v : hermitian_basis(p)) out.basis.push_back(siegel_nilpotent_field(model, v, zeroW));
  for (int r = 0; r < p; ++r)
    for (int col = 0; col < m; ++col)
      for (const GaussRational& s : {GaussRational(1), GaussRational::I()}) {
        ExactMatrix c(p, m);
        c(r, col) = s;
        out.basis.push_back(siegel_nilpotent_field(model, zeroV, c));
      }
  out.ambient = out.basis;
  return out;
}

} // namespace crtube
