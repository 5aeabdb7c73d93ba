#pragma once

#include "crtube/gauss_rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crtube {

using ExactVector = std::vector<GaussRational>;

/// Dense row-major matrix of Gaussian rationals.
class ExactMatrix {
public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols);
  static ExactMatrix identity(int n);
  static ExactMatrix from_rows(const std::vector<ExactVector>& rows);
  /// Matrix whose columns are the given vectors (all of equal length).
  static ExactMatrix from_columns(const std::vector<ExactVector>& cols, int length = -1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  GaussRational& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const GaussRational& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
  ExactVector row(int i) const;
  ExactVector col(int j) const;

  ExactMatrix transpose() const;
  ExactMatrix conjugate() const;
  ExactMatrix adjoint() const;
  GaussRational trace() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const GaussRational& c);

  std::string str() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<GaussRational> data_;
};

ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b);
ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b);
ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator*(const GaussRational& c, ExactMatrix a);
ExactVector operator*(const ExactVector& row, const ExactMatrix& m);
bool operator==(const ExactMatrix& a, const ExactMatrix& b);
inline bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

/// [A, B] = AB - BA.
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

/// Rank over Q(i) by fraction-free (Bareiss) elimination on a Gaussian-integer scaling of the rows.
int rank_exact(const ExactMatrix& m);

/// Basis of {x : m x = 0}.
std::vector<ExactVector> nullspace(const ExactMatrix& m);

/// Throws std::domain_error when singular.
ExactMatrix inverse(const ExactMatrix& m);

/// Some solution of m x = b, or nullopt.
std::optional<ExactVector> solve(const ExactMatrix& m, const ExactVector& b);

/// Real 2N-vectors (Re v, Im v) as rows of a rational matrix.
ExactMatrix realify(const std::vector<ExactVector>& vectors);

/// Dimension of the R-linear span of vectors in C^N.
int real_span_dim(const std::vector<ExactVector>& vectors);

/// Basis of real coefficient vectors c with sum_k c_k v_k = 0.
std::vector<std::vector<mpq_class>> real_relations(const std::vector<ExactVector>& vectors);

/// Reduced row-echelon basis of the complex span (rows), for canonical comparisons.
std::vector<ExactVector> row_basis(const std::vector<ExactVector>& vectors, int length);

/// Numbers of positive and negative eigenvalues of a Hermitian matrix, by exact congruence.
std::pair<int, int> hermitian_inertia(const ExactMatrix& h);

} // namespace crtube
