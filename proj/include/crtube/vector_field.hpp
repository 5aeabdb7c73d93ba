#pragma once

#include "crtube/exact_matrix.hpp"
#include "crtube/mpoly.hpp"

#include <complex>
#include <string>
#include <vector>

namespace crtube {

/// Holomorphic polynomial vector field f(z) d/dz on C^n; components carry no conjugate variables.
class PolyVectorField {
public:
  PolyVectorField() = default;
  explicit PolyVectorField(std::vector<MPoly> components);
  /// Zero field on C^n.
  static PolyVectorField zero(int n);
  /// Constant field v d/dz.
  static PolyVectorField constant(const ExactVector& v);
  /// c * z_j d/dz_k.
  static PolyVectorField linear(int n, int j, int k, const GaussRational& c = GaussRational(1));

  int n() const { return static_cast<int>(comps_.size()); }
  const MPoly& operator[](int k) const { return comps_[k]; }
  const std::vector<MPoly>& components() const { return comps_; }
  bool is_zero() const;
  int degree() const;

  PolyVectorField& operator+=(const PolyVectorField& o);
  PolyVectorField& operator-=(const PolyVectorField& o);
  PolyVectorField& operator*=(const GaussRational& c);

  std::string str() const;

private:
  std::vector<MPoly> comps_;
};

PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b);
PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b);
PolyVectorField operator*(const GaussRational& c, PolyVectorField a);
bool operator==(const PolyVectorField& a, const PolyVectorField& b);
inline bool operator!=(const PolyVectorField& a, const PolyVectorField& b) { return !(a == b); }

/// [f d/dz, g d/dz]_k = sum_j (f_j dg_k/dz_j - g_j df_k/dz_j).
PolyVectorField bracket(const PolyVectorField& xi, const PolyVectorField& eta);

ExactVector evaluate(const PolyVectorField& xi, const ExactVector& a);
std::vector<std::complex<double>> evaluate(const PolyVectorField& xi, const std::vector<std::complex<double>>& a);

/// Coefficient vectors of fields over a shared monomial index (used for span tests).
std::vector<ExactVector> coefficient_vectors(const std::vector<PolyVectorField>& fields);

/// Ordered real basis of a span of fields, with its ambient algebra and a label.
struct SubalgebraSpec {
  std::vector<PolyVectorField> ambient;
  std::vector<PolyVectorField> basis;
  std::string label;
};

/// Real-valued defining polynomial in z and conj(z).
class RealDefining {
public:
  explicit RealDefining(MPoly rho);
  const MPoly& rho() const { return rho_; }
  int n() const { return rho_.nvars(); }

private:
  MPoly rho_;
};

bool is_abelian(const std::vector<PolyVectorField>& basis);
inline bool is_abelian(const SubalgebraSpec& v) { return is_abelian(v.basis); }

/// dim_R span(basis + i*basis) == 2 |basis|.
bool totally_real(const std::vector<PolyVectorField>& basis);
inline bool totally_real(const SubalgebraSpec& v) { return totally_real(v.basis); }

/// The complex span of the values at a is all of C^n.
bool spans_tangent(const std::vector<PolyVectorField>& basis, const ExactVector& a);
inline bool spans_tangent(const SubalgebraSpec& v, const ExactVector& a) { return spans_tangent(v.basis, a); }

/// Membership of xi in the real span of basis.
bool in_real_span(const std::vector<PolyVectorField>& basis, const PolyVectorField& xi);

/// Real coordinates of xi with respect to an R-independent basis; throws if xi is outside the span.
std::vector<mpq_class> real_coordinates(const std::vector<PolyVectorField>& basis, const PolyVectorField& xi);

/// Whether the real part of xi is tangent to {rho = 0}, decided by exact division by rho.
/// Supported rho: affine part plus terms z_j conj(z_k); anything else throws std::domain_error.
bool tangent_to(const PolyVectorField& xi, const RealDefining& rho);

/// Trace-free (r+1)x(r+1) matrix X = [[a, b], [c, d]] -> field b + z d - a z - (z c) z on the chart [1, z].
PolyVectorField matrix_to_field(const ExactMatrix& x);
/// Inverse of matrix_to_field; throws when the field is not of chart form.
ExactMatrix field_to_matrix(const PolyVectorField& xi);

/// Global sign s with field_to_matrix([xi_X, xi_Y]) = s [X, Y]; computed once from a sample pair.
int homomorphism_sign();

/// g_* xi for the projective map [Z] -> [g Z] on homogeneous column vectors.
PolyVectorField pushforward_projective(const ExactMatrix& g, const PolyVectorField& xi);

/// Antiholomorphic affine map z -> conj(z) A + b in row convention.
struct AntiAffineMap {
  ExactMatrix A;
  ExactVector b;
  ExactVector apply(const ExactVector& z) const;
};

/// (tau_* xi)(w) = conj(f(tau^{-1}(w))) A.
PolyVectorField pushforward_antiholomorphic(const AntiAffineMap& tau, const PolyVectorField& xi);

} // namespace crtube
