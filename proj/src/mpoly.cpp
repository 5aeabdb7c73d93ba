#include "crtube/mpoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace crtube {

namespace {

unsigned degree_of(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool divides(const Exponent& a, const Exponent& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

} // namespace

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
  unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  for (size_t k = 0; k < a.size() && k < b.size(); ++k)
    if (a[k] != b[k]) return a[k] < b[k];
  return a.size() < b.size();
}

MPoly::MPoly(int nvars, int nconj) : nvars_(nvars), nconj_(nconj) {
  if (nvars < 0 || (nconj != 0 && nconj != nvars))
    throw std::invalid_argument("MPoly: nconj must be 0 or nvars");
}

MPoly MPoly::constant(int nvars, int nconj, const GaussRational& c) {
  MPoly p(nvars, nconj);
  p.add_term(Exponent(nvars + nconj, 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int nconj, int idx) {
  if (idx < 0 || idx >= nvars + nconj) throw std::out_of_range("MPoly::variable: index out of range");
  Exponent e(nvars + nconj, 0);
  e[idx] = 1;
  return monomial(nvars, nconj, e, GaussRational(1));
}

MPoly MPoly::monomial(int nvars, int nconj, const Exponent& e, const GaussRational& c) {
  MPoly p(nvars, nconj);
  if (static_cast<int>(e.size()) != p.width()) throw std::invalid_argument("MPoly::monomial: bad exponent length");
  p.add_term(e, c);
  return p;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.rbegin()->first));
}

int MPoly::degree_in(int var) const {
  if (var < 0 || var >= width()) throw std::out_of_range("MPoly::degree_in: variable out of range");
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

GaussRational MPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussRational() : it->second;
}

GaussRational MPoly::constant_term() const { return coefficient(Exponent(width(), 0)); }

std::pair<Exponent, GaussRational> MPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("MPoly::leading_term of zero polynomial");
  return *terms_.rbegin();
}

void MPoly::add_term(const Exponent& e, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MPoly::check_compatible(const MPoly& o) const {
  if (nvars_ != o.nvars_ || nconj_ != o.nconj_) throw std::invalid_argument("MPoly: ring mismatch");
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly MPoly::conj_swap() const {
  if (nconj_ == 0) throw std::logic_error("MPoly::conj_swap needs conjugate variables");
  MPoly r(nvars_, nconj_);
  for (const auto& [e, c] : terms_) {
    Exponent f(e.size());
    for (int k = 0; k < nvars_; ++k) {
      f[k] = e[nvars_ + k];
      f[nvars_ + k] = e[k];
    }
    r.add_term(f, c.conj());
  }
  return r;
}

MPoly MPoly::conj_coeffs() const {
  MPoly r(nvars_, nconj_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
  return r;
}

MPoly MPoly::with_conj() const {
  if (nconj_ != 0) return *this;
  MPoly r(nvars_, nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f(2 * nvars_, 0);
    std::copy(e.begin(), e.end(), f.begin());
    r.terms_.emplace(f, c);
  }
  return r;
}

MPoly MPoly::truncate(int maxdeg) const {
  MPoly r(nvars_, nconj_);
  for (const auto& [e, c] : terms_)
    if (static_cast<int>(degree_of(e)) <= maxdeg) r.terms_.emplace(e, c);
  return r;
}

bool MPoly::is_real() const { return nconj_ != 0 && conj_swap() == *this; }

bool MPoly::is_holomorphic() const {
  for (const auto& [e, c] : terms_)
    for (int k = nvars_; k < width(); ++k)
      if (e[k] != 0) return false;
  return true;
}

GaussRational MPoly::evaluate(const std::vector<GaussRational>& z) const {
  if (static_cast<int>(z.size()) != nvars_) throw std::invalid_argument("MPoly::evaluate: point dimension mismatch");
  std::vector<GaussRational> vals(width());
  for (int k = 0; k < nvars_; ++k) {
    vals[k] = z[k];
    if (nconj_) vals[nvars_ + k] = z[k].conj();
  }
  GaussRational sum;
  for (const auto& [e, c] : terms_) {
    GaussRational t = c;
    for (int k = 0; k < width(); ++k)
      for (unsigned m = 0; m < e[k]; ++m) t *= vals[k];
    sum += t;
  }
  return sum;
}

std::complex<double> MPoly::evaluate(const std::vector<std::complex<double>>& z) const {
  if (static_cast<int>(z.size()) != nvars_) throw std::invalid_argument("MPoly::evaluate: point dimension mismatch");
  std::vector<std::complex<double>> vals(width());
  for (int k = 0; k < nvars_; ++k) {
    vals[k] = z[k];
    if (nconj_) vals[nvars_ + k] = std::conj(z[k]);
  }
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (int k = 0; k < width(); ++k)
      for (unsigned m = 0; m < e[k]; ++m) t *= vals[k];
    sum += t;
  }
  return sum;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool unit = c == GaussRational(1);
    bool constant = degree_of(e) == 0;
    if (!unit || constant) os << "(" << c.str() << ")";
    bool needStar = !unit || constant;
    for (int k = 0; k < width(); ++k) {
      if (e[k] == 0) continue;
      if (needStar) os << "*";
      needStar = true;
      os << (k < nvars_ ? "z" : "zb") << (k % nvars_) + 1;
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os.str();
}

MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
MPoly operator-(const MPoly& a) { return GaussRational(-1) * a; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars() || a.nconj() != b.nconj()) throw std::invalid_argument("MPoly: ring mismatch");
  MPoly r(a.nvars(), a.nconj());
  Exponent e(a.width());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly operator*(const GaussRational& c, MPoly a) { return a *= c; }

bool operator==(const MPoly& a, const MPoly& b) {
  return a.nvars() == b.nvars() && a.nconj() == b.nconj() && a.terms() == b.terms();
}

MPoly poly_diff(const MPoly& p, int var) {
  if (var < 0 || var >= p.width()) throw std::out_of_range("poly_diff: variable index out of range");
  MPoly r(p.nvars(), p.nconj());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent f = e;
    --f[var];
    r.add_term(f, c * GaussRational(static_cast<long>(e[var])));
  }
  return r;
}

MPoly pow(const MPoly& p, unsigned k) {
  MPoly r = MPoly::constant(p.nvars(), p.nconj(), GaussRational(1));
  MPoly base = p;
  while (k) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return r;
}

MPoly compose(const MPoly& p, const std::vector<MPoly>& subs) {
  if (static_cast<int>(subs.size()) != p.width()) throw std::invalid_argument("compose: need one substitute per variable");
  if (subs.empty()) return p;
  const int nv = subs[0].nvars(), nc = subs[0].nconj();
  // cache powers per variable
  std::vector<std::vector<MPoly>> powers(subs.size());
  for (size_t k = 0; k < subs.size(); ++k) {
    if (subs[k].nvars() != nv || subs[k].nconj() != nc) throw std::invalid_argument("compose: substitutes in different rings");
    int d = p.degree_in(static_cast<int>(k));
    powers[k].push_back(MPoly::constant(nv, nc, GaussRational(1)));
    for (int m = 1; m <= d; ++m) powers[k].push_back(powers[k].back() * subs[k]);
  }
  MPoly r(nv, nc);
  for (const auto& [e, c] : p.terms()) {
    MPoly t = MPoly::constant(nv, nc, c);
    for (size_t k = 0; k < e.size(); ++k)
      if (e[k]) t *= powers[k][e[k]];
    r += t;
  }
  return r;
}

std::pair<MPoly, MPoly> divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("divide: zero divisor");
  if (a.nvars() != b.nvars() || a.nconj() != b.nconj()) throw std::invalid_argument("MPoly: ring mismatch");
  MPoly q(a.nvars(), a.nconj()), r(a.nvars(), a.nconj()), p = a;
  const auto [lb, cb] = b.leading_term();
  while (!p.is_zero()) {
    auto [lp, cp] = p.leading_term();
    if (divides(lb, lp)) {
      Exponent e(lp.size());
      for (size_t k = 0; k < e.size(); ++k) e[k] = lp[k] - lb[k];
      MPoly t = MPoly::monomial(a.nvars(), a.nconj(), e, cp / cb);
      q += t;
      p -= t * b;
    } else {
      MPoly t = MPoly::monomial(a.nvars(), a.nconj(), lp, cp);
      r += t;
      p -= t;
    }
  }
  return {q, r};
}

} // namespace crtube
