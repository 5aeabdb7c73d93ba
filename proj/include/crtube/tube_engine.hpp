#pragma once

#include "crtube/exact_matrix.hpp"
#include "crtube/expr.hpp"
#include "crtube/models.hpp"
#include "crtube/vector_field.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crtube {

using CVector = std::vector<cplx>;

// ---- validation ----

/// Anti-holomorphic projective involution [Z] -> [conj(Z) T] on homogeneous row vectors (1, z).
struct ProjectiveInvolution {
  ExactMatrix T;
  /// Affine chart form z -> conj(z) A + b, present when T fixes the hyperplane at infinity.
  std::optional<AntiAffineMap> affine;
  /// Largest coefficient of tau_* xi + xi over the basis of v (zero for an exact solve).
  double residual = 0.0;
  /// The linear system for T had a one-dimensional solution set.
  bool unique = false;
};

struct ValidationReport {
  bool abelian = false;
  bool totallyReal = false;
  bool spansTangent = false;
  int dimV = 0;
  std::optional<ProjectiveInvolution> involutionFound;
  /// dim of the -1 part of the ambient algebra, evaluated at a.
  int antiTangentDim = 0;
  /// involution found, v inside the -1 part, and antiTangentDim = r.
  bool conditionIII = false;
  bool all() const { return abelian && totallyReal && spansTangent && conditionIII; }
};

/// Checks abelian / totally real / spanning at a and searches an involution fixing a with v in its -1 part.
/// Throws std::invalid_argument when v is not inside the real span of g.
ValidationReport validate_subalgebra(const std::vector<PolyVectorField>& g, const SubalgebraSpec& v, const ExactVector& a);

// ---- flows ----

struct FlowResult {
  CVector endpoint;
  int stepCount = 0;
  /// max |rho| along accepted steps when a target is given, else 0.
  double maxResidual = 0.0;
};

/// Thrown when the adaptive step size collapses (pole or chart exit).
struct FlowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using NumericField = std::function<CVector(const CVector&)>;

/// Dormand-Prince 5(4) on z' = f(z) from a over [0, t]; local tolerance min(tol, 1e-12).
FlowResult flow(const NumericField& f, const CVector& a, double t, double tol, const RealDefining* target = nullptr);
FlowResult flow(const PolyVectorField& xi, const CVector& a, double t, double tol, const RealDefining* target = nullptr);

/// exp(sum c_j xi_j)(a): one flow of the combined field over t = 1. Throws std::invalid_argument if e is not abelian.
CVector exp_point(const SubalgebraSpec& e, const std::vector<double>& coeffs, const CVector& a, double tol);
/// Composition of the individual flows exp(c_j xi_j) in the given index order.
CVector exp_point_ordered(const SubalgebraSpec& e, const std::vector<double>& coeffs, const CVector& a, double tol,
                          const std::vector<int>& order);

// ---- sampling and covering checks ----

/// Newton-projected points of {baseEquation = 0} inside the sampling box and domain constraints.
/// Throws std::runtime_error when fewer than n points are found.
std::vector<std::vector<double>> sample_base(const TubeRealizationSpec& spec, int n, std::uint64_t seed);

/// Base points plus random translations i y with y in [-3, 3]^r.
std::vector<CVector> sample_tube(const TubeRealizationSpec& spec, int n, std::uint64_t seed);

struct ResidualReport {
  double maxResidual = 0.0;
  int samples = 0;
  bool pass = false;
};

/// max |rho(phi(b + i y))| over sampled tube points.
ResidualReport verify_covering(const TubeRealizationSpec& spec, const RealDefining& target, int nSamples, double tol,
                               std::uint64_t seed = 0);

/// max |d phi_z(v) - xi(phi(z))| over sampled tube points.
ResidualReport check_field_correspondence(const TubeRealizationSpec& spec, const CVector& v, const PolyVectorField& xi,
                                          int nSamples, double tol, std::uint64_t seed = 0);

/// Whether affine fields tangent to the base span its tangent space at every sample.
bool affine_homogeneity(const TubeRealizationSpec& spec, int nSamples, double tol, std::uint64_t seed = 0);

// ---- conjugacy invariants ----

struct SpectrumCounts {
  int zero = 0;
  int real = 0;
  int imaginary = 0;
  int generic = 0;
  auto operator<=>(const SpectrumCounts&) const = default;
};

struct InvariantSignature {
  int dimNilpotent = 0;
  SpectrumCounts genericSpectrum;
  auto operator<=>(const InvariantSignature&) const = default;
  std::string str() const;
};

/// Dense univariate polynomial, coefficient k multiplies x^k.
using UPoly = std::vector<GaussRational>;

/// det(x I - m), monic.
UPoly characteristic_polynomial(const ExactMatrix& m);
/// Pairs (factor, multiplicity) with squarefree, pairwise coprime monic factors.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);
/// Numeric roots of a squarefree polynomial (companion matrix).
CVector numeric_roots(const UPoly& p);

/// Dimension of {X in span_R(reps) : X nilpotent}, exact.
int nilpotent_dimension(const std::vector<ExactMatrix>& reps);
/// Eigenvalue classes of ad_X on sl(n) for one element X.
SpectrumCounts ad_spectrum(const ExactMatrix& x);

InvariantSignature conjugacy_invariants(const std::vector<ExactMatrix>& reps, std::uint64_t seed = 0);
/// Uses field_to_matrix on each basis element.
InvariantSignature conjugacy_invariants(const SubalgebraSpec& v, std::uint64_t seed = 0);

} // namespace crtube
