#pragma once

#include "crtube/gauss_rational.hpp"

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace crtube {

/// Exponent vector: first the z-variables, then (if present) the conjugate variables.
using Exponent = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then lex with z1 > z2 > ...
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial in z_1..z_n and optionally conj(z_1)..conj(z_n).
class MPoly {
public:
  using TermMap = std::map<Exponent, GaussRational, GradedLex>;

  explicit MPoly(int nvars = 0, int nconj = 0);

  static MPoly constant(int nvars, int nconj, const GaussRational& c);
  /// The coordinate function for variable index idx (conjugates start at nvars).
  static MPoly variable(int nvars, int nconj, int idx);
  static MPoly monomial(int nvars, int nconj, const Exponent& e, const GaussRational& c);

  int nvars() const { return nvars_; }
  int nconj() const { return nconj_; }
  int width() const { return nvars_ + nconj_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(int var) const;
  GaussRational coefficient(const Exponent& e) const;
  GaussRational constant_term() const;
  /// Largest term in graded lex order; throws on zero.
  std::pair<Exponent, GaussRational> leading_term() const;

  void add_term(const Exponent& e, const GaussRational& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const GaussRational& c);

  /// Conjugate coefficients and swap z_k with conj(z_k) exponents.
  MPoly conj_swap() const;
  /// Conjugate coefficients only.
  MPoly conj_coeffs() const;
  /// Embed into the ring with conjugate variables (nconj = nvars).
  MPoly with_conj() const;
  /// Drop all terms of total degree above maxdeg.
  MPoly truncate(int maxdeg) const;
  bool is_real() const;
  bool is_holomorphic() const;

  /// Exact evaluation; conjugate variables take the conjugate of the matching coordinate.
  GaussRational evaluate(const std::vector<GaussRational>& z) const;
  std::complex<double> evaluate(const std::vector<std::complex<double>>& z) const;

  std::string str() const;

private:
  int nvars_;
  int nconj_;
  TermMap terms_;
  void check_compatible(const MPoly& o) const;
};

MPoly operator+(MPoly a, const MPoly& b);
MPoly operator-(MPoly a, const MPoly& b);
MPoly operator-(const MPoly& a);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly operator*(const GaussRational& c, MPoly a);
bool operator==(const MPoly& a, const MPoly& b);
inline bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

/// Formal partial derivative with respect to variable index var.
MPoly poly_diff(const MPoly& p, int var);

/// Substitute every variable of p by the corresponding polynomial of subs (all in one ring).
MPoly compose(const MPoly& p, const std::vector<MPoly>& subs);

/// Division by a single polynomial; returns {quotient, remainder}. Remainder is zero iff b | a.
std::pair<MPoly, MPoly> divide(const MPoly& a, const MPoly& b);

MPoly pow(const MPoly& p, unsigned k);

} // namespace crtube
