#include "crtube/tube_engine.hpp"

#include <Eigen/Eigenvalues>

#include <map>
#include <random>
#include <sstream>

namespace crtube {

namespace {

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly monic(UPoly p) {
  trim(p);
  if (p.empty()) return p;
  GaussRational inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

UPoly sub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (size_t k = 1; k < p.size(); ++k) d.push_back(GaussRational(static_cast<long>(k)) * p[k]);
  trim(d);
  return d;
}

std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
  trim(a);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  UPoly q(std::max(0, deg(a) - deg(b) + 1));
  const GaussRational lead = b.back().inverse();
  while (!a.empty() && deg(a) >= deg(b)) {
    int shift = deg(a) - deg(b);
    GaussRational c = a.back() * lead;
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

UPoly quotient(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

} // namespace

UPoly characteristic_polynomial(const ExactMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic_polynomial: matrix is not square");
  const int n = m.rows();
  UPoly c(n + 1);
  c[n] = GaussRational(1);
  ExactMatrix mk(n, n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * ExactMatrix::identity(n);
    c[n - k] = GaussRational(-1) * (m * mk).trace() / GaussRational(static_cast<long>(k));
  }
  return c;
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
  UPoly f = monic(p);
  if (f.empty()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<UPoly, int>> out;
  if (deg(f) == 0) return out;
  UPoly fp = derivative(f);
  UPoly a0 = gcd(f, fp);
  UPoly b = quotient(f, a0);
  UPoly c = quotient(fp, a0);
  UPoly d = sub(c, derivative(b));
  for (int i = 1; deg(b) > 0; ++i) {
    UPoly a = gcd(b, d);
    b = quotient(b, a);
    c = quotient(d, a);
    d = sub(c, derivative(b));
    if (deg(a) > 0) out.emplace_back(a, i);
  }
  return out;
}

CVector numeric_roots(const UPoly& p) {
  UPoly f = monic(p);
  const int n = deg(f);
  if (n <= 0) return {};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -f[i].to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  CVector out;
  for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()[i]);
  return out;
}

int nilpotent_dimension(const std::vector<ExactMatrix>& reps) {
  if (reps.empty()) return 0;
  const int n = reps[0].rows();
  auto flat = [](const ExactMatrix& m) {
    ExactVector v;
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
  };
  // complex basis of the unital associative algebra generated by reps
  std::vector<ExactMatrix> alg{ExactMatrix::identity(n)};
  std::vector<ExactVector> flats{flat(alg[0])};
  for (size_t head = 0; head < alg.size(); ++head)
    for (const auto& x : reps) {
      ExactMatrix prod = alg[head] * x;
      flats.push_back(flat(prod));
      if (rank_exact(ExactMatrix::from_rows(flats)) == static_cast<int>(flats.size())) alg.push_back(prod);
      else flats.pop_back();
    }
  std::vector<ExactVector> traces;
  for (const auto& x : reps) {
    ExactVector t;
    for (const auto& p : alg) t.push_back((x * p).trace());
    traces.push_back(std::move(t));
  }
  return static_cast<int>(real_relations(traces).size());
}

SpectrumCounts ad_spectrum(const ExactMatrix& x) {
  CVector lambda;
  for (const auto& [factor, mult] : squarefree_decomposition(characteristic_polynomial(x)))
    for (cplx root : numeric_roots(factor))
      for (int k = 0; k < mult; ++k) lambda.push_back(root);
  double scale = 1.0;
  for (cplx l : lambda) scale = std::max(scale, std::abs(l));
  const double eps = 1e-8 * scale;
  SpectrumCounts c;
  bool droppedZero = false;
  for (cplx li : lambda)
    for (cplx lj : lambda) {
      cplx mu = li - lj;
      if (std::abs(mu) < eps) {
        if (!droppedZero) droppedZero = true; // sl(n), not gl(n)
        else ++c.zero;
      } else if (std::abs(mu.imag()) < eps) ++c.real;
      else if (std::abs(mu.real()) < eps) ++c.imaginary;
      else ++c.generic;
    }
  return c;
}

std::string InvariantSignature::str() const {
  std::ostringstream os;
  os << "nil=" << dimNilpotent << " ad(0:" << genericSpectrum.zero << ",R:" << genericSpectrum.real << ",iR:" << genericSpectrum.imaginary
     << ",C:" << genericSpectrum.generic << ")";
  return os.str();
}

InvariantSignature conjugacy_invariants(const std::vector<ExactMatrix>& reps, std::uint64_t seed) {
  InvariantSignature sig;
  if (reps.empty()) return sig;
  sig.dimNilpotent = nilpotent_dimension(reps);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-1000, 1000);
  std::vector<SpectrumCounts> draws;
  while (draws.size() < 3) {
    ExactMatrix x(reps[0].rows(), reps[0].cols());
    for (const auto& m : reps) x += GaussRational(coef(rng)) * m;
    if (x.is_zero()) continue;
    draws.push_back(ad_spectrum(x));
  }
  sig.genericSpectrum = draws[0];
  std::map<SpectrumCounts, int> votes;
  for (const auto& d : draws)
    if (++votes[d] >= 2) sig.genericSpectrum = d;
  return sig;
}

InvariantSignature conjugacy_invariants(const SubalgebraSpec& v, std::uint64_t seed) {
  std::vector<ExactMatrix> reps;
  for (const auto& f : v.basis) reps.push_back(field_to_matrix(f));
  return conjugacy_invariants(reps, seed);
}

} // namespace crtube
