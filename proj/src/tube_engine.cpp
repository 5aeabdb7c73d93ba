#include "crtube/tube_engine.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace crtube {

namespace {

ExactVector homogeneous_point(const ExactVector& a) {
  ExactVector h{GaussRational(1)};
  h.insert(h.end(), a.begin(), a.end());
  return h;
}

// Induced action X -> T^{-1} conj(X) T of [Z] -> [conj(Z) T].
ExactMatrix conj_action(const ExactMatrix& t, const ExactMatrix& tinv, const ExactMatrix& x) { return tinv * x.conjugate() * t; }

std::optional<ProjectiveInvolution> check_candidate(ExactMatrix t, const std::vector<PolyVectorField>& g,
                                                    const std::vector<ExactMatrix>& vmats, const ExactVector& a, int& antiDim) {
  const int n = t.rows();
  ExactMatrix tinv;
  try {
    tinv = inverse(t);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
  // normalize the projective scale
  GaussRational scale;
  for (int i = 0; i < n && scale.is_zero(); ++i)
    for (int j = 0; j < n && scale.is_zero(); ++j)
      if (!t(i, j).is_zero()) scale = t(i, j);
  if (!t(0, 0).is_zero()) scale = t(0, 0);
  t = scale.inverse() * t;
  tinv = inverse(t);

  ExactMatrix sq = t.conjugate() * t;
  if (sq != sq(0, 0) * ExactMatrix::identity(n)) return std::nullopt;
  for (const auto& x : vmats)
    if (conj_action(t, tinv, x) != GaussRational(-1) * x) return std::nullopt;

  // action on the ambient algebra, as a real matrix in the basis g
  const int d = static_cast<int>(g.size());
  ExactMatrix op(d, d);
  for (int i = 0; i < d; ++i) {
    PolyVectorField img = matrix_to_field(conj_action(t, tinv, field_to_matrix(g[i])));
    if (!in_real_span(g, img)) return std::nullopt;
    auto c = real_coordinates(g, img);
    for (int k = 0; k < d; ++k) op(k, i) = GaussRational(c[k]);
  }
  std::vector<ExactVector> values;
  for (const auto& c : nullspace(op + ExactMatrix::identity(d))) {
    PolyVectorField f = PolyVectorField::zero(g[0].n());
    for (int i = 0; i < d; ++i)
      if (!c[i].is_zero()) f += c[i] * g[i];
    values.push_back(evaluate(f, a));
  }
  antiDim = values.empty() ? 0 : real_span_dim(values);

  ProjectiveInvolution inv;
  inv.T = t;
  bool affine = true;
  for (int j = 1; j < n; ++j) affine = affine && t(j, 0).is_zero();
  if (affine) {
    AntiAffineMap m;
    m.A = ExactMatrix(n - 1, n - 1);
    m.b.assign(n - 1, GaussRational());
    for (int k = 1; k < n; ++k) {
      m.b[k - 1] = t(0, k);
      for (int j = 1; j < n; ++j) m.A(j - 1, k - 1) = t(j, k);
    }
    inv.affine = m;
  }
  return inv;
}

} // namespace

ValidationReport validate_subalgebra(const std::vector<PolyVectorField>& g, const SubalgebraSpec& v, const ExactVector& a) {
  for (const auto& f : v.basis)
    if (!in_real_span(g, f)) throw std::invalid_argument("validate_subalgebra: subalgebra element outside the ambient algebra");
  ValidationReport rep;
  rep.dimV = static_cast<int>(v.basis.size());
  rep.abelian = is_abelian(v);
  rep.totallyReal = totally_real(v);
  rep.spansTangent = spans_tangent(v, a);
  if (v.basis.empty() || g.empty()) return rep;

  std::vector<ExactMatrix> vmats;
  try {
    for (const auto& f : v.basis) vmats.push_back(field_to_matrix(f));
    for (const auto& f : g) field_to_matrix(f);
  } catch (const std::exception&) {
    return rep; // not of projective form; no involution in the searched family
  }
  const int n = vmats[0].rows();
  const int unknowns = n * n + 1;
  auto tidx = [n](int j, int k) { return j * n + k; };
  std::vector<ExactVector> rows;
  for (const auto& x : vmats) {
    ExactMatrix xc = x.conjugate();
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        ExactVector row(unknowns);
        for (int j = 0; j < n; ++j) {
          row[tidx(j, k)] += xc(i, j);
          row[tidx(i, j)] += x(j, k);
        }
        rows.push_back(std::move(row));
      }
  }
  ExactVector ah = homogeneous_point(a);
  for (int k = 0; k < n; ++k) {
    ExactVector row(unknowns);
    for (int j = 0; j < n; ++j) row[tidx(j, k)] = ah[j].conj();
    row[n * n] = -ah[k];
    rows.push_back(std::move(row));
  }
  auto sols = nullspace(ExactMatrix::from_rows(rows));
  for (const auto& s : sols) {
    ExactMatrix t(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) t(j, k) = s[tidx(j, k)];
    int antiDim = 0;
    auto inv = check_candidate(t, g, vmats, a, antiDim);
    if (!inv) continue;
    inv->unique = sols.size() == 1;
    rep.involutionFound = inv;
    rep.antiTangentDim = antiDim;
    rep.conditionIII = antiDim == static_cast<int>(a.size());
    break;
  }
  return rep;
}

// ---- flows ----

FlowResult flow(const NumericField& f, const CVector& a, double t, double tol, const RealDefining* target) {
  if (!(tol > 0)) throw std::invalid_argument("flow: tol must be positive");
  FlowResult res;
  res.endpoint = a;
  auto residual = [&](const CVector& z) { return target ? std::abs(target->rho().evaluate(z)) : 0.0; };
  res.maxResidual = residual(a);
  if (t == 0.0) return res;

  static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static const double a21 = 1.0 / 5;
  static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200, e6 = 22.0 / 525,
                      e7 = -1.0 / 40;
  (void)c2, (void)c3, (void)c4, (void)c5;

  const double etol = std::min(tol, 1e-12);
  const size_t n = a.size();
  const double dir = t > 0 ? 1.0 : -1.0;
  const double span = std::abs(t);
  double done = 0.0;
  double h = span / 100.0;
  CVector y = a;
  CVector k1 = f(y);
  auto axpy = [n](const CVector& base, std::initializer_list<std::pair<double, const CVector*>> terms, double hh) {
    CVector out = base;
    for (size_t i = 0; i < n; ++i) {
      cplx s = 0;
      for (const auto& [c, v] : terms) s += c * (*v)[i];
      out[i] += hh * s;
    }
    return out;
  };
  int steps = 0;
  while (done < span) {
    if (h < 1e-14 * std::max(1.0, span)) throw FlowError("flow: step size underflow");
    if (++steps > 2000000) throw FlowError("flow: too many steps");
    h = std::min(h, span - done);
    const double hs = dir * h;
    CVector k2 = f(axpy(y, {{a21, &k1}}, hs));
    CVector k3 = f(axpy(y, {{a31, &k1}, {a32, &k2}}, hs));
    CVector k4 = f(axpy(y, {{a41, &k1}, {a42, &k2}, {a43, &k3}}, hs));
    CVector k5 = f(axpy(y, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}, hs));
    CVector k6 = f(axpy(y, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}, hs));
    CVector yn = axpy(y, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}}, hs);
    CVector k7 = f(yn);
    double err = 0.0;
    bool finite = true;
    for (size_t i = 0; i < n; ++i) {
      cplx e = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      double sc = etol + etol * std::max(std::abs(y[i]), std::abs(yn[i]));
      double q = std::abs(e) / sc;
      if (!std::isfinite(q) || !std::isfinite(std::abs(yn[i]))) finite = false;
      err = std::max(err, q);
    }
    if (!finite) {
      h *= 0.1;
      continue;
    }
    if (err <= 1.0) {
      done += h;
      y = std::move(yn);
      k1 = std::move(k7);
      ++res.stepCount;
      res.maxResidual = std::max(res.maxResidual, residual(y));
    }
    double fac = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    h *= fac;
  }
  res.endpoint = y;
  return res;
}

FlowResult flow(const PolyVectorField& xi, const CVector& a, double t, double tol, const RealDefining* target) {
  if (static_cast<int>(a.size()) != xi.n()) throw std::invalid_argument("flow: point dimension differs from field");
  return flow([&xi](const CVector& z) { return evaluate(xi, z); }, a, t, tol, target);
}

CVector exp_point(const SubalgebraSpec& e, const std::vector<double>& coeffs, const CVector& a, double tol) {
  if (coeffs.size() != e.basis.size()) throw std::invalid_argument("exp_point: coefficient count differs from basis size");
  if (!is_abelian(e)) throw std::invalid_argument("exp_point: span is not abelian");
  if (e.basis.empty()) return a;
  PolyVectorField sum = PolyVectorField::zero(e.basis[0].n());
  for (size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0.0) sum += GaussRational(mpq_class(coeffs[j])) * e.basis[j];
  return flow(sum, a, 1.0, tol).endpoint;
}

CVector exp_point_ordered(const SubalgebraSpec& e, const std::vector<double>& coeffs, const CVector& a, double tol,
                          const std::vector<int>& order) {
  if (coeffs.size() != e.basis.size()) throw std::invalid_argument("exp_point_ordered: coefficient count differs from basis size");
  CVector z = a;
  for (int j : order) z = flow(e.basis.at(j), z, coeffs.at(j), tol).endpoint;
  return z;
}

// ---- sampling ----

namespace {

CVector to_complex(const std::vector<double>& x) { return CVector(x.begin(), x.end()); }

double base_value(const Expr& g, const std::vector<double>& x) { return g.eval(to_complex(x)).real(); }

std::vector<double> base_gradient(const Expr& g, const std::vector<double>& x) {
  const size_t r = x.size();
  std::vector<double> grad(r);
  CVector z = to_complex(x);
  for (size_t k = 0; k < r; ++k) {
    CVector d(r, 0.0);
    d[k] = 1.0;
    grad[k] = g.eval_dual(z, d).der.real();
  }
  return grad;
}

} // namespace

std::vector<std::vector<double>> sample_base(const TubeRealizationSpec& spec, int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("sample_base: negative sample count");
  const int r = spec.r;
  std::vector<double> lo(r, spec.boxLo), hi(r, spec.boxHi);
  for (const auto& c : spec.domainConstraints) {
    lo[c.index] = std::max(lo[c.index], c.lo);
    hi[c.index] = std::min(hi[c.index], c.hi);
  }
  auto inside = [&](const std::vector<double>& x) {
    for (int k = 0; k < r; ++k)
      if (!(x[k] > lo[k] && x[k] < hi[k])) return false;
    return true;
  };
  std::mt19937_64 rng(seed);
  std::vector<std::uniform_real_distribution<double>> dist;
  for (int k = 0; k < r; ++k) dist.emplace_back(lo[k], hi[k]);
  std::vector<std::vector<double>> out;
  const long maxAttempts = 200L * std::max(n, 1);
  for (long attempt = 0; attempt < maxAttempts && static_cast<int>(out.size()) < n; ++attempt) {
    std::vector<double> x(r);
    for (int k = 0; k < r; ++k) x[k] = dist[k](rng);
    bool ok = false;
    for (int it = 0; it < 60; ++it) {
      double gv = base_value(spec.baseEquation, x);
      if (!std::isfinite(gv)) break;
      auto grad = base_gradient(spec.baseEquation, x);
      double g2 = 0;
      for (double v : grad) g2 += v * v;
      if (std::abs(gv) <= 1e-14 * std::max(1.0, std::sqrt(g2))) {
        ok = true;
        break;
      }
      if (g2 < 1e-24) break;
      for (int k = 0; k < r; ++k) x[k] -= gv * grad[k] / g2;
    }
    if (ok && inside(x)) out.push_back(std::move(x));
  }
  if (static_cast<int>(out.size()) < n) throw std::runtime_error("sample_base: could not find enough base points for " + spec.name);
  return out;
}

std::vector<CVector> sample_tube(const TubeRealizationSpec& spec, int n, std::uint64_t seed) {
  auto base = sample_base(spec, n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> dy(-3.0, 3.0);
  std::vector<CVector> out;
  for (const auto& x : base) {
    CVector z(x.size());
    for (size_t k = 0; k < x.size(); ++k) z[k] = cplx(x[k], dy(rng));
    out.push_back(std::move(z));
  }
  return out;
}

ResidualReport verify_covering(const TubeRealizationSpec& spec, const RealDefining& target, int nSamples, double tol,
                               std::uint64_t seed) {
  if (target.n() != spec.r) throw std::invalid_argument("verify_covering: target dimension differs from r");
  ResidualReport rep;
  for (const auto& z : sample_tube(spec, nSamples, seed)) {
    double res = std::abs(target.rho().evaluate(spec.coveringMap.eval(z)));
    if (!std::isfinite(res)) res = INFINITY;
    rep.maxResidual = std::max(rep.maxResidual, res);
    ++rep.samples;
  }
  rep.pass = rep.maxResidual <= tol;
  return rep;
}

ResidualReport check_field_correspondence(const TubeRealizationSpec& spec, const CVector& v, const PolyVectorField& xi,
                                          int nSamples, double tol, std::uint64_t seed) {
  if (static_cast<int>(v.size()) != spec.r || xi.n() != spec.r)
    throw std::invalid_argument("check_field_correspondence: dimension mismatch");
  ResidualReport rep;
  for (const auto& z : sample_tube(spec, nSamples, seed)) {
    auto [w, dw] = spec.coveringMap.eval_with_derivative(z, v);
    CVector f = evaluate(xi, w);
    double s = 0;
    for (size_t k = 0; k < w.size(); ++k) s += std::norm(dw[k] - f[k]);
    double res = std::sqrt(s);
    if (!std::isfinite(res)) throw std::domain_error("check_field_correspondence: derivative unavailable at a sample");
    rep.maxResidual = std::max(rep.maxResidual, res);
    ++rep.samples;
  }
  rep.pass = rep.maxResidual <= tol;
  return rep;
}

bool affine_homogeneity(const TubeRealizationSpec& spec, int nSamples, double tol, std::uint64_t seed) {
  const int r = spec.r;
  const int unknowns = r * r + r;
  auto pts = sample_base(spec, std::max(nSamples, 2 * unknowns), seed);
  Eigen::MatrixXd rows(pts.size(), unknowns);
  std::vector<Eigen::VectorXd> normals;
  for (size_t i = 0; i < pts.size(); ++i) {
    auto grad = base_gradient(spec.baseEquation, pts[i]);
    Eigen::VectorXd nrm = Eigen::Map<Eigen::VectorXd>(grad.data(), r);
    nrm.normalize();
    normals.push_back(nrm);
    // unknowns: A (row-major) then b; condition n . (A x + b) = 0
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) rows(i, j * r + k) = nrm[j] * pts[i][k];
      rows(i, r * r + j) = nrm[j];
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double thresh = std::max(tol, 1e-12) * 1e3 * std::max(sv[0], 1.0);
  std::vector<Eigen::VectorXd> kernel;
  for (int c = 0; c < unknowns; ++c)
    if (sv[c] <= thresh) kernel.push_back(svd.matrixV().col(c));
  if (kernel.empty()) return r == 1;
  for (size_t i = 0; i < pts.size(); ++i) {
    Eigen::Map<const Eigen::VectorXd> x(pts[i].data(), r);
    Eigen::MatrixXd vals(r, kernel.size());
    for (size_t c = 0; c < kernel.size(); ++c) {
      Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> A(kernel[c].data(), r, r);
      Eigen::VectorXd val = A * x + kernel[c].tail(r);
      vals.col(c) = val - normals[i] * normals[i].dot(val);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> local(vals);
    int rank = 0;
    for (int c = 0; c < local.singularValues().size(); ++c)
      if (local.singularValues()[c] > 1e-6) ++rank;
    if (rank < r - 1) return false;
  }
  return true;
}

} // namespace crtube
