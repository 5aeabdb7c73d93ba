#pragma once

#include "crtube/exact_matrix.hpp"
#include "crtube/expr.hpp"
#include "crtube/vector_field.hpp"

#include <string>
#include <vector>

namespace crtube {

// ---- sphere and its Cayley image ----

/// Real basis of the automorphism algebra of the unit sphere in C^r: (alpha + z u - (z|alpha) z) d/dz.
std::vector<PolyVectorField> sphere_hol_basis(int r);

/// sum z_k conj(z_k) - 1.
RealDefining sphere_defining(int r);

/// Integral Cayley matrix acting on homogeneous column vectors:
/// [z0 - z1, 2(z0 + z1), 2 z2, ..., 2 zr] = diag(1, 2, sqrt2, ..., sqrt2) times the classical transform.
ExactMatrix cayley_matrix(int r);

/// Rational weight K with cayley K cayley a scaled signed permutation.
ExactMatrix cayley_square_weight(int r);

/// z1 + conj(z1) - sum_{j>=2} eps_j z_j conj(z_j), eps_j = -1 for j <= p, +1 otherwise.
RealDefining quadric_defining(int p, int q);

/// Cayley pushforward of the sphere basis; tangent to quadric_defining(1, r).
std::vector<PolyVectorField> cayley_ambient(int r);

/// split: alpha = 0, spanned by i z_k d/dz_k. compact: alpha = (i, 0, ..., 0).
enum class CartanKind { split, compact };

SubalgebraSpec sphere_cartan(int r, CartanKind kind);

/// On the Cayley chart: i d/dz1, i z_k d/dz_k (2 <= k <= s), i (d/dz_j - z_j d/dz1) (s < j <= r).
SubalgebraSpec sphere_parabolic_family(int r, int s);

/// Rational point of the sphere with all coordinates nonzero.
ExactVector sphere_base_point(int r);

// ---- tube catalog ----

enum class TubeCase { exp, trig, parabolic };

/// Inequality lo < x_index < hi on the base.
struct DomainConstraint {
  int index;
  double lo;
  double hi;
  std::string text;
};

struct TubeRealizationSpec {
  TubeCase caseTag;
  int r;
  int s = 0;
  std::string name;
  CoveringMap coveringMap;
  /// Real-analytic function of x whose zero set is the base.
  Expr baseEquation;
  std::string baseText;
  std::vector<DomainConstraint> domainConstraints;
  /// The tube is base + i R^r.
  std::string translationConvention = "iR^r";
  /// Sampling box for base points.
  double boxLo = -2.0;
  double boxHi = 2.0;
  SubalgebraSpec subalgebra;
  RealDefining target;
  /// Exact point of the target inside the open orbit, used for validation.
  ExactVector basePoint;
};

/// The r + 2 tube realizations: exp, trig, parabolic-1 .. parabolic-r.
std::vector<TubeRealizationSpec> tube_catalog(int r);

// ---- involutions of S^{p,q} ----

enum class InvolutionKind { I, II, III, IV };
std::string to_string(InvolutionKind k);

struct SignatureForm {
  int p;
  int q;
  /// diag(1_p, -1_q).
  ExactMatrix J;
};
SignatureForm signature_form(int p, int q);

struct InvolutionSpec {
  InvolutionKind kind;
  int p;
  int q;
  int eps;
  int delta;
  /// tau~(z) = conj(z) tauTilde for row vectors z = (u, v).
  ExactMatrix tauTilde;
  SignatureForm form;
};

bool involution_admissible(InvolutionKind kind, int p, int q);
/// Throws std::invalid_argument when the type is not admissible for (p, q).
InvolutionSpec involution(InvolutionKind kind, int p, int q);

/// Exact polynomial checks tau~^2 = eps id and h(tau~ z) = delta h(z).
struct InvolutionIdentities {
  bool squareIsEps;
  bool formScalesByDelta;
};
InvolutionIdentities verify_involution(const InvolutionSpec& tau);

/// Real basis of su(p, q) = {X : X* J + J X = 0, tr X = 0} acting on column vectors.
std::vector<ExactMatrix> su_basis(int p, int q);
bool in_su(const ExactMatrix& x, const ExactMatrix& J);

/// Induced action X -> T conj(X) T^{-1} with T = tauTilde^T.
ExactMatrix induced_action(const InvolutionSpec& tau, const ExactMatrix& x);

/// +-1 eigenspace of the induced action on the real span of basis.
std::vector<ExactMatrix> fixed_subalgebra(const std::vector<ExactMatrix>& basis, const InvolutionSpec& tau, int sign);

/// +-1 eigenspace of xi -> tau_* xi on the real span of fields.
SubalgebraSpec fixed_subalgebra(const SubalgebraSpec& g, const AntiAffineMap& tau, int sign);

// ---- hermitian cones and Siegel models ----

struct ConeSpec {
  int p;
  int j;
  int k;
};

/// x has exactly j positive and k negative eigenvalues; throws for non-hermitian x.
bool cone_membership(const ConeSpec& cone, const ExactMatrix& x);

/// Real basis of Herm(p): E_rr, then E_rs + E_sr and i(E_rs - E_sr) for r < s.
std::vector<ExactMatrix> hermitian_basis(int p);
/// Complex coordinates of M in hermitian_basis (so M = sum c_b B_b).
ExactVector hermitian_coordinates(const ExactMatrix& m);

/// Sigma = {(z, w) : Im z - w w^* in C^p_{j,k}} with z in C^{p x p}, w in C^{p x (q-p)}.
struct SiegelModel {
  int p;
  int q;
  ConeSpec cone;
  int dimV() const { return p * p; }
  int dimW() const { return p * (q - p); }
  /// F(w1, w2) = w1 w2^*.
  ExactMatrix F(const ExactMatrix& w1, const ExactMatrix& w2) const;
};

SiegelModel siegel_model(int p, int q, int j, int k);

/// Fields (2i F(w, c) + v) d/dz + c d/dw in coordinates (hermitian coordinates of z, entries of w).
/// Basis order: v over hermitian_basis, then c over E_rs and i E_rs.
SubalgebraSpec siegel_nilpotent_basis(const SiegelModel& model);

/// Field of siegel_nilpotent_basis for a single pair (v, c).
PolyVectorField siegel_nilpotent_field(const SiegelModel& model, const ExactMatrix& v, const ExactMatrix& c);

} // namespace crtube
