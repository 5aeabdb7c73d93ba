#include "crtube/exact_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace crtube {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: negative size");
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = GaussRational(1);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<ExactVector>& rows) {
  if (rows.empty()) return {};
  ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols()) throw std::invalid_argument("ExactMatrix::from_rows: ragged rows");
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<ExactVector>& cols, int length) {
  int n = length >= 0 ? length : (cols.empty() ? 0 : static_cast<int>(cols[0].size()));
  ExactMatrix m(n, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (static_cast<int>(cols[j].size()) != n) throw std::invalid_argument("ExactMatrix::from_columns: length mismatch");
    for (int i = 0; i < n; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

ExactVector ExactMatrix::row(int i) const {
  return ExactVector(data_.begin() + static_cast<long>(i) * cols_, data_.begin() + static_cast<long>(i + 1) * cols_);
}

ExactVector ExactMatrix::col(int j) const {
  ExactVector v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::conjugate() const {
  ExactMatrix t(rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) t.data_[k] = data_[k].conj();
  return t;
}

ExactMatrix ExactMatrix::adjoint() const { return conjugate().transpose(); }

GaussRational ExactMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  GaussRational t;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ExactMatrix: size mismatch");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ExactMatrix: size mismatch");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussRational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
  }
  os << "]";
  return os.str();
}

ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("ExactMatrix product: size mismatch");
  ExactMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const GaussRational& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

ExactMatrix operator*(const GaussRational& c, ExactMatrix a) { return a *= c; }

ExactVector operator*(const ExactVector& row, const ExactMatrix& m) {
  if (static_cast<int>(row.size()) != m.rows()) throw std::invalid_argument("row*matrix: size mismatch");
  ExactVector out(m.cols());
  for (int k = 0; k < m.rows(); ++k) {
    if (row[k].is_zero()) continue;
    for (int j = 0; j < m.cols(); ++j) out[j] += row[k] * m(k, j);
  }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

namespace {

// Multiply a row by the lcm of all denominators so its entries become Gaussian integers.
void clear_denominators(std::vector<GaussRational>& row) {
  mpz_class l = 1;
  for (const auto& x : row) {
    l = lcm(l, x.re.get_den());
    l = lcm(l, x.im.get_den());
  }
  if (l == 1) return;
  GaussRational s{mpq_class(l)};
  for (auto& x : row) x *= s;
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(ExactMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    GaussRational inv = m(r, c).inverse();
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      GaussRational f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

int rank_exact(const ExactMatrix& input) {
  const int R = input.rows(), C = input.cols();
  std::vector<std::vector<GaussRational>> a(R);
  for (int i = 0; i < R; ++i) {
    a[i] = input.row(i);
    clear_denominators(a[i]);
  }
  GaussRational prev(1);
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int p = -1;
    for (int i = r; i < R; ++i)
      if (!a[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    for (int i = r + 1; i < R; ++i) {
      for (int j = c + 1; j < C; ++j) {
        GaussRational v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        a[i][j] = v / prev;
      }
      a[i][c] = GaussRational();
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::vector<ExactVector> nullspace(const ExactMatrix& m) {
  ExactMatrix a = m;
  std::vector<int> piv = rref(a);
  std::vector<bool> isPivot(m.cols(), false);
  for (int c : piv) isPivot[c] = true;
  std::vector<ExactVector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (isPivot[f]) continue;
    ExactVector v(m.cols());
    v[f] = GaussRational(1);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: non-square matrix");
  const int n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = GaussRational(1);
  }
  std::vector<int> piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  ExactMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<ExactVector> solve(const ExactMatrix& m, const ExactVector& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<int> piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  ExactVector x(m.cols());
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), m.cols());
  return x;
}

ExactMatrix realify(const std::vector<ExactVector>& vectors) {
  if (vectors.empty()) return {};
  const size_t n = vectors[0].size();
  ExactMatrix m(static_cast<int>(vectors.size()), static_cast<int>(2 * n));
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != n) throw std::invalid_argument("realify: vectors of different length");
    for (size_t k = 0; k < n; ++k) {
      m(static_cast<int>(i), static_cast<int>(k)) = GaussRational(vectors[i][k].re);
      m(static_cast<int>(i), static_cast<int>(n + k)) = GaussRational(vectors[i][k].im);
    }
  }
  return m;
}

int real_span_dim(const std::vector<ExactVector>& vectors) {
  if (vectors.empty()) return 0;
  return rank_exact(realify(vectors));
}

std::vector<std::vector<mpq_class>> real_relations(const std::vector<ExactVector>& vectors) {
  std::vector<std::vector<mpq_class>> out;
  if (vectors.empty()) return out;
  ExactMatrix cols = realify(vectors).transpose();
  for (const auto& v : nullspace(cols)) {
    std::vector<mpq_class> c(v.size());
    for (size_t k = 0; k < v.size(); ++k) c[k] = v[k].re;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ExactVector> row_basis(const std::vector<ExactVector>& vectors, int length) {
  if (vectors.empty()) return {};
  ExactMatrix m(static_cast<int>(vectors.size()), length);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(vectors[i].size()) != length) throw std::invalid_argument("row_basis: length mismatch");
    for (int j = 0; j < length; ++j) m(i, j) = vectors[i][j];
  }
  std::vector<int> piv = rref(m);
  std::vector<ExactVector> out;
  for (size_t r = 0; r < piv.size(); ++r) out.push_back(m.row(static_cast<int>(r)));
  return out;
}

std::pair<int, int> hermitian_inertia(const ExactMatrix& h) {
  if (!h.is_square() || h != h.adjoint()) throw std::invalid_argument("hermitian_inertia: matrix is not hermitian");
  ExactMatrix a = h;
  const int n = a.rows();
  int pos = 0, neg = 0;
  auto swap_index = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (int r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (!a(i, i).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) {
      int pi = -1, pj = -1;
      for (int i = k; i < n && pi < 0; ++i)
        for (int j = k; j < n; ++j)
          if (i != j && !a(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) break;
      // e_i <- e_i + t e_j with t = a_ij makes the new diagonal entry 2|a_ij|^2.
      GaussRational t = a(pi, pj);
      for (int c = 0; c < n; ++c) a(pi, c) += t * a(pj, c);
      for (int r = 0; r < n; ++r) a(r, pi) += t.conj() * a(r, pj);
      p = pi;
    }
    swap_index(k, p);
    const GaussRational d = a(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      GaussRational f = a(i, k) / d;
      for (int c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      GaussRational fc = f.conj();
      for (int r = k; r < n; ++r) a(r, i) -= fc * a(r, k);
    }
    if (sgn(d.re) > 0) ++pos;
    else ++neg;
  }
  return {pos, neg};
}

} // namespace crtube
