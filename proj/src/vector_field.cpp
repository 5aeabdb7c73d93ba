#include "crtube/vector_field.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace crtube {

PolyVectorField::PolyVectorField(std::vector<MPoly> components) : comps_(std::move(components)) {
  const int n = static_cast<int>(comps_.size());
  for (const auto& c : comps_)
    if (c.nvars() != n || c.nconj() != 0) throw std::invalid_argument("PolyVectorField: components must be holomorphic in n variables");
}

PolyVectorField PolyVectorField::zero(int n) { return PolyVectorField(std::vector<MPoly>(n, MPoly(n, 0))); }

PolyVectorField PolyVectorField::constant(const ExactVector& v) {
  const int n = static_cast<int>(v.size());
  std::vector<MPoly> c;
  for (int k = 0; k < n; ++k) c.push_back(MPoly::constant(n, 0, v[k]));
  return PolyVectorField(std::move(c));
}

PolyVectorField PolyVectorField::linear(int n, int j, int k, const GaussRational& c) {
  PolyVectorField f = zero(n);
  f.comps_[k] = c * MPoly::variable(n, 0, j);
  return f;
}

bool PolyVectorField::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

int PolyVectorField::degree() const {
  int d = -1;
  for (const auto& c : comps_) d = std::max(d, c.total_degree());
  return d;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
  if (n() != o.n()) throw std::invalid_argument("PolyVectorField: dimension mismatch");
  for (int k = 0; k < n(); ++k) comps_[k] += o.comps_[k];
  return *this;
}

PolyVectorField& PolyVectorField::operator-=(const PolyVectorField& o) {
  if (n() != o.n()) throw std::invalid_argument("PolyVectorField: dimension mismatch");
  for (int k = 0; k < n(); ++k) comps_[k] -= o.comps_[k];
  return *this;
}

PolyVectorField& PolyVectorField::operator*=(const GaussRational& c) {
  for (auto& p : comps_) p *= c;
  return *this;
}

std::string PolyVectorField::str() const {
  std::ostringstream os;
  os << "(";
  for (int k = 0; k < n(); ++k) os << (k ? ", " : "") << comps_[k].str();
  os << ")";
  return os.str();
}

PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
PolyVectorField operator*(const GaussRational& c, PolyVectorField a) { return a *= c; }
bool operator==(const PolyVectorField& a, const PolyVectorField& b) { return a.components() == b.components(); }

PolyVectorField bracket(const PolyVectorField& xi, const PolyVectorField& eta) {
  if (xi.n() != eta.n()) throw std::invalid_argument("bracket: dimension mismatch");
  const int n = xi.n();
  std::vector<MPoly> out(n, MPoly(n, 0));
  for (int j = 0; j < n; ++j) {
    const bool fj = !xi[j].is_zero(), gj = !eta[j].is_zero();
    if (!fj && !gj) continue;
    for (int k = 0; k < n; ++k) {
      if (fj) out[k] += xi[j] * poly_diff(eta[k], j);
      if (gj) out[k] -= eta[j] * poly_diff(xi[k], j);
    }
  }
  return PolyVectorField(std::move(out));
}

ExactVector evaluate(const PolyVectorField& xi, const ExactVector& a) {
  ExactVector v(xi.n());
  for (int k = 0; k < xi.n(); ++k) v[k] = xi[k].evaluate(a);
  return v;
}

std::vector<std::complex<double>> evaluate(const PolyVectorField& xi, const std::vector<std::complex<double>>& a) {
  std::vector<std::complex<double>> v(xi.n());
  for (int k = 0; k < xi.n(); ++k) v[k] = xi[k].evaluate(a);
  return v;
}

std::vector<ExactVector> coefficient_vectors(const std::vector<PolyVectorField>& fields) {
  std::map<std::pair<int, Exponent>, size_t> index;
  for (const auto& f : fields)
    for (int k = 0; k < f.n(); ++k)
      for (const auto& [e, c] : f[k].terms()) index.try_emplace({k, e}, 0);
  size_t pos = 0;
  for (auto& [key, slot] : index) slot = pos++;
  std::vector<ExactVector> out;
  for (const auto& f : fields) {
    ExactVector v(index.size());
    for (int k = 0; k < f.n(); ++k)
      for (const auto& [e, c] : f[k].terms()) v[index.at({k, e})] = c;
    out.push_back(std::move(v));
  }
  return out;
}

RealDefining::RealDefining(MPoly rho) : rho_(std::move(rho)) {
  if (rho_.nconj() != rho_.nvars()) throw std::invalid_argument("RealDefining: needs conjugate variables");
  if (!rho_.is_real()) throw std::invalid_argument("RealDefining: polynomial is not real-valued");
}

bool is_abelian(const std::vector<PolyVectorField>& basis) {
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (!bracket(basis[i], basis[j]).is_zero()) return false;
  return true;
}

bool totally_real(const std::vector<PolyVectorField>& basis) {
  std::vector<PolyVectorField> doubled = basis;
  for (const auto& f : basis) doubled.push_back(GaussRational::I() * f);
  return real_span_dim(coefficient_vectors(doubled)) == 2 * static_cast<int>(basis.size());
}

bool spans_tangent(const std::vector<PolyVectorField>& basis, const ExactVector& a) {
  const int n = static_cast<int>(a.size());
  if (basis.empty()) return n == 0;
  std::vector<ExactVector> vals;
  for (const auto& f : basis) {
    ExactVector v = evaluate(f, a);
    vals.push_back(v);
    for (auto& x : v) x *= GaussRational::I();
    vals.push_back(v);
  }
  return rank_exact(ExactMatrix::from_rows(vals)) == n;
}

bool in_real_span(const std::vector<PolyVectorField>& basis, const PolyVectorField& xi) {
  std::vector<PolyVectorField> all = basis;
  all.push_back(xi);
  auto cv = coefficient_vectors(all);
  const int with = real_span_dim(cv);
  cv.pop_back();
  return with == real_span_dim(cv);
}

std::vector<mpq_class> real_coordinates(const std::vector<PolyVectorField>& basis, const PolyVectorField& xi) {
  std::vector<PolyVectorField> all = basis;
  all.push_back(xi);
  auto cv = coefficient_vectors(all);
  ExactVector target = cv.back();
  cv.pop_back();
  ExactMatrix m = realify(cv).transpose();
  ExactMatrix t = realify({target}).transpose();
  auto sol = solve(m, t.col(0));
  if (!sol) throw std::invalid_argument("real_coordinates: field outside the real span");
  std::vector<mpq_class> c(sol->size());
  for (size_t k = 0; k < c.size(); ++k) c[k] = (*sol)[k].re;
  return c;
}

namespace {

bool supported_shape(const MPoly& rho) {
  const int n = rho.nvars();
  for (const auto& [e, c] : rho.terms()) {
    unsigned hol = 0, anti = 0;
    for (int k = 0; k < n; ++k) {
      hol += e[k];
      anti += e[n + k];
    }
    if (hol + anti <= 1) continue;
    if (hol == 1 && anti == 1) continue;
    return false;
  }
  return true;
}

} // namespace

bool tangent_to(const PolyVectorField& xi, const RealDefining& rho) {
  const MPoly& r = rho.rho();
  if (xi.n() != r.nvars()) throw std::invalid_argument("tangent_to: dimension mismatch");
  if (!supported_shape(r)) throw std::domain_error("tangent_to: unsupported defining polynomial (needs affine plus hermitian part)");
  MPoly h(r.nvars(), r.nvars());
  for (int j = 0; j < xi.n(); ++j)
    if (!xi[j].is_zero()) h += xi[j].with_conj() * poly_diff(r, j);
  MPoly real = h + h.conj_swap();
  return divide(real, r).second.is_zero();
}

PolyVectorField matrix_to_field(const ExactMatrix& x) {
  if (!x.is_square() || x.rows() < 2) throw std::invalid_argument("matrix_to_field: need a square matrix of size >= 2");
  if (!x.trace().is_zero()) throw std::invalid_argument("matrix_to_field: matrix is not trace-free");
  const int n = x.rows() - 1;
  std::vector<MPoly> z;
  for (int j = 0; j < n; ++j) z.push_back(MPoly::variable(n, 0, j));
  MPoly zc(n, 0);
  for (int j = 0; j < n; ++j) zc += x(j + 1, 0) * z[j];
  std::vector<MPoly> comps;
  for (int k = 0; k < n; ++k) {
    MPoly f = MPoly::constant(n, 0, x(0, k + 1));
    for (int j = 0; j < n; ++j) f += x(j + 1, k + 1) * z[j];
    f -= x(0, 0) * z[k];
    f -= zc * z[k];
    comps.push_back(std::move(f));
  }
  return PolyVectorField(std::move(comps));
}

ExactMatrix field_to_matrix(const PolyVectorField& xi) {
  const int n = xi.n();
  if (n < 1) throw std::invalid_argument("field_to_matrix: empty field");
  if (xi.degree() > 2) throw std::invalid_argument("field_to_matrix: degree above 2 is not of chart form");
  ExactVector c(n);
  for (int j = 0; j < n; ++j) {
    // coefficient of z_j z_k in f_k is -c_j; use any k
    Exponent e(n, 0);
    e[j] += 1;
    int k = (j + 1) % n;
    if (n == 1) k = 0;
    e[k] += 1;
    c[j] = -xi[k].coefficient(e);
  }
  ExactMatrix l(n, n);
  ExactVector b(n);
  for (int k = 0; k < n; ++k) {
    b[k] = xi[k].constant_term();
    for (int j = 0; j < n; ++j) {
      Exponent e(n, 0);
      e[j] = 1;
      l(j, k) = xi[k].coefficient(e);
    }
  }
  GaussRational a = -l.trace() / GaussRational(static_cast<long>(n + 1));
  ExactMatrix x(n + 1, n + 1);
  x(0, 0) = a;
  for (int k = 0; k < n; ++k) {
    x(0, k + 1) = b[k];
    x(k + 1, 0) = c[k];
    for (int j = 0; j < n; ++j) x(j + 1, k + 1) = l(j, k) + (j == k ? a : GaussRational());
  }
  if (matrix_to_field(x) != xi) throw std::invalid_argument("field_to_matrix: field is not of projective chart form");
  return x;
}

int homomorphism_sign() {
  static const int sign = [] {
    ExactMatrix x(3, 3), y(3, 3);
    x(0, 1) = GaussRational(1);
    y(1, 1) = GaussRational(1);
    y(2, 2) = GaussRational(-1);
    y(1, 2) = GaussRational(2);
    y(2, 0) = GaussRational(1);
    ExactMatrix lhs = field_to_matrix(bracket(matrix_to_field(x), matrix_to_field(y)));
    ExactMatrix rhs = commutator(x, y);
    if (lhs == rhs) return 1;
    if (lhs == GaussRational(-1) * rhs) return -1;
    throw std::logic_error("matrix_to_field is not a signed homomorphism");
  }();
  return sign;
}

PolyVectorField pushforward_projective(const ExactMatrix& g, const PolyVectorField& xi) {
  ExactMatrix x = field_to_matrix(xi);
  if (g.rows() != x.rows() || !g.is_square()) throw std::invalid_argument("pushforward_projective: size mismatch");
  ExactMatrix gt = g.transpose();
  return matrix_to_field(inverse(gt) * x * gt);
}

ExactVector AntiAffineMap::apply(const ExactVector& z) const {
  ExactVector zc(z.size());
  for (size_t k = 0; k < z.size(); ++k) zc[k] = z[k].conj();
  ExactVector w = zc * A;
  for (size_t k = 0; k < w.size(); ++k) w[k] += b[k];
  return w;
}

PolyVectorField pushforward_antiholomorphic(const AntiAffineMap& tau, const PolyVectorField& xi) {
  const int n = xi.n();
  if (tau.A.rows() != n || tau.A.cols() != n || static_cast<int>(tau.b.size()) != n)
    throw std::invalid_argument("pushforward_antiholomorphic: size mismatch");
  ExactMatrix ainv;
  try {
    ainv = inverse(tau.A);
  } catch (const std::domain_error&) {
    throw std::domain_error("pushforward_antiholomorphic: singular linear part");
  }
  // u = (w - b) A^{-1}
  std::vector<MPoly> u;
  for (int i = 0; i < n; ++i) {
    MPoly ui(n, 0);
    for (int l = 0; l < n; ++l) {
      if (ainv(l, i).is_zero()) continue;
      ui += ainv(l, i) * (MPoly::variable(n, 0, l) - MPoly::constant(n, 0, tau.b[l]));
    }
    u.push_back(std::move(ui));
  }
  std::vector<MPoly> fu;
  for (int j = 0; j < n; ++j) fu.push_back(compose(xi[j].conj_coeffs(), u));
  std::vector<MPoly> out(n, MPoly(n, 0));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      if (!tau.A(j, k).is_zero()) out[k] += tau.A(j, k) * fu[j];
  return PolyVectorField(std::move(out));
}

} // namespace crtube
