#pragma once

// Test-side reference computations. Nothing here calls into the library's algorithms
// beyond construction of values; the checks are closed forms or plain floating point.

#include "crtube/exact_matrix.hpp"
#include "crtube/mpoly.hpp"
#include "crtube/vector_field.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using crtube::ExactMatrix;
using crtube::ExactVector;
using crtube::GaussRational;
using crtube::MPoly;
using crtube::PolyVectorField;

inline GaussRational rand_gauss(std::mt19937_64& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  return GaussRational(static_cast<long>(d(rng)), static_cast<long>(d(rng)));
}

inline ExactMatrix rand_matrix(std::mt19937_64& rng, int rows, int cols, int lo = -3, int hi = 3) {
  ExactMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rand_gauss(rng, lo, hi);
  return m;
}

/// Random polynomial in nv variables (and nc conjugates) with total degree <= deg.
inline MPoly rand_poly(std::mt19937_64& rng, int nv, int nc, int deg, int terms) {
  MPoly p(nv, nc);
  std::uniform_int_distribution<int> var(0, nv + nc - 1), dd(0, deg);
  for (int t = 0; t < terms; ++t) {
    crtube::Exponent e(nv + nc, 0);
    int d = dd(rng);
    for (int s = 0; s < d; ++s) ++e[var(rng)];
    p.add_term(e, rand_gauss(rng));
  }
  return p;
}

inline PolyVectorField rand_field(std::mt19937_64& rng, int n, int deg, int terms = 4) {
  std::vector<MPoly> c;
  for (int k = 0; k < n; ++k) c.push_back(rand_poly(rng, n, 0, deg, terms));
  return PolyVectorField(c);
}

inline Eigen::MatrixXcd to_eigen(const ExactMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).to_complex();
  return e;
}

/// Numerical rank by singular values relative to the largest one.
inline int numeric_rank(const Eigen::MatrixXd& m, double rel = 1e-9) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > rel * s(0)) ++r;
  return r;
}

inline double eval_real(const MPoly& p, const std::vector<double>& y) {
  std::vector<cplx> z(y.begin(), y.end());
  return p.evaluate(z).real();
}

/// Dimension of the affine span of the graph {(y, f(y))} over random y in [-1, 1]^k.
inline int graph_affine_span_dim(int k, const std::vector<MPoly>& f, std::mt19937_64& rng, int samples = 40) {
  const int n = k + static_cast<int>(f.size());
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd d(samples, n);
  for (int s = 0; s < samples; ++s) {
    std::vector<double> y(k);
    for (auto& v : y) v = u(rng);
    for (int i = 0; i < k; ++i) d(s, i) = y[i];
    for (size_t j = 0; j < f.size(); ++j) d(s, k + static_cast<int>(j)) = eval_real(f[j], y);
  }
  // the origin lies on the graph, so differences to it are the rows themselves
  return numeric_rank(d);
}

/// Central-difference directional derivative of a holomorphic map.
inline std::vector<cplx> directional(const std::function<std::vector<cplx>(const std::vector<cplx>&)>& f,
                                     const std::vector<cplx>& z, const std::vector<cplx>& v, double h = 1e-5) {
  std::vector<cplx> zp = z, zm = z;
  for (size_t k = 0; k < z.size(); ++k) {
    zp[k] += h * v[k];
    zm[k] -= h * v[k];
  }
  auto a = f(zp), b = f(zm);
  std::vector<cplx> out(a.size());
  for (size_t k = 0; k < a.size(); ++k) out[k] = (a[k] - b[k]) / (2.0 * h);
  return out;
}

inline double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0;
  for (size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

/// Affine chart image of homogeneous coordinates.
inline std::vector<cplx> dehomogenize(const std::vector<cplx>& Z) {
  std::vector<cplx> z(Z.size() - 1);
  for (size_t k = 1; k < Z.size(); ++k) z[k - 1] = Z[k] / Z[0];
  return z;
}

} // namespace oracle
