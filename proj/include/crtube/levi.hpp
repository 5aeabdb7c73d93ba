#pragma once

#include "crtube/exact_matrix.hpp"
#include "crtube/models.hpp"
#include "crtube/mpoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crtube {

/// Tube germ at 0 over the graph y_{k+j} = f_j(y_1..y_k) in R^n.
/// f_j are real polynomials in k variables with terms of degree 2..order only.
struct GraphGerm {
  int k = 0;
  int n = 0;
  std::vector<MPoly> f;
  int order = 3;
  /// The f_j are the full germ, not a truncation.
  bool exact = true;
  /// Optional coordinate names, free first.
  std::vector<std::string> labels;

  /// Throws std::invalid_argument on inconsistent sizes, low-order terms or non-real coefficients.
  void validate() const;
};

/// Rigid germ Im Z''_j = Phi_j(Z', conj Z') at 0, Z' in C^m, Z'' in C^c, Phi_j real of order >= 2.
struct RigidGerm {
  int m = 0;
  int c = 0;
  /// Polynomials in m variables and their conjugates.
  std::vector<MPoly> phi;
  int order = 3;
  std::vector<std::string> labels;

  int dim() const { return m + c; }
};

/// Substitutes y' = (Z' - conj Z') / (2i).
RigidGerm to_rigid(const GraphGerm& g);

struct LeviChainResult {
  /// dim_C H^k at 0 for k = 0..kmax.
  std::vector<int> dims;
  /// Exact bases of H^k in the germ's coordinates (CR part first).
  std::vector<std::vector<ExactVector>> kernels;
  bool stabilized = false;
  std::optional<int> nondegeneracyOrder;
};

/// Iterated Levi kernels at 0. H^k is the annihilator of the values at 0 of all words of length <= k
/// in a frame of antiholomorphic tangent fields applied to the complex gradients of the defining functions.
/// With frameSeed the frame is a random polynomial recombination of the standard one.
/// Throws std::invalid_argument when order < kmax + 2.
LeviChainResult levi_chain(const RigidGerm& germ, int kmax, std::optional<std::uint64_t> frameSeed = std::nullopt);
LeviChainResult levi_chain(const GraphGerm& germ, int kmax, std::optional<std::uint64_t> frameSeed = std::nullopt);

/// Tube over the cone of hermitian p x p matrices of signature (j, k), at the point diag(1_j, -1_k, 0) shifted to 0.
/// Free coordinates: block (1,1) in hermitian-basis order, then Re/Im of the block (1,2) entries; dependent: block (2,2).
GraphGerm cone_tube_germ(const ConeSpec& cone, int order);

/// Coordinates of a complex p x p matrix in the chart order of cone_tube_germ (complex-linear).
ExactVector cone_chart_coordinates(const ExactMatrix& m, const ConeSpec& cone);

/// Siegel germ Sigma at (i diag(1_j, -1_k, 0), 0); CR coordinates are the free tube coordinates, then w row-major.
RigidGerm siegel_germ(const SiegelModel& model, int order);

struct SiegelSplitLevel {
  int k = 0;
  /// H^k of the tube, embedded into the Siegel coordinates.
  std::vector<ExactVector> tubeKernel;
  /// W^k = H^k(Sigma) intersected with W, as vectors in W.
  std::vector<ExactVector> wKernel;
  int dimSigma = 0;
  /// H^k T is inside H^k Sigma and dims add up.
  bool directSum = false;
  /// k = 0: W^0 = W (true for k > 0).
  bool w0IsW = true;
  /// F(W^{k+1}, W) and F(W, W^{k+1}) lie in H^k T (true on the last level).
  bool fInclusion = true;
  /// W^{k+1} inside W^k, and H^k T = 0 forces H^{k+1} Sigma = 0 (true on the last level).
  bool recursion = true;
  bool all() const { return directSum && w0IsW && fInclusion && recursion; }
};

/// Levels k = 0..kmax of the kernel split; the germs are built at order kmax + 3.
std::vector<SiegelSplitLevel> siegel_split(const SiegelModel& model, int kmax);

enum class Verdict { yes, no, inconclusive };
std::string to_string(Verdict v);

struct FiniteTypeResult {
  Verdict verdict = Verdict::inconclusive;
  /// Smallest |nu| at which the bracket vectors span the missing directions.
  std::optional<int> order;
  /// The f_j are linearly independent (affine-span criterion).
  bool jetsIndependent = false;
};

/// Bracket vectors (d^nu d_l f_j(0))_j, 1 <= |nu| <= order - 1, against the normal directions.
FiniteTypeResult finite_type(const GraphGerm& germ);

struct NondegeneracyResult {
  Verdict verdict = Verdict::inconclusive;
  std::optional<int> order;
};

/// yes with the order when the chain reaches 0 within kmax, inconclusive otherwise.
NondegeneracyResult holomorphic_nondegenerate(const RigidGerm& germ, int kmax);

} // namespace crtube
