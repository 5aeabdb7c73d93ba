#include "crtube/gauss_rational.hpp"

#include <stdexcept>

namespace crtube {

GaussRational GaussRational::frac(long p, long q) {
  if (q == 0) throw std::domain_error("GaussRational::frac: zero denominator");
  mpq_class v(p, q);
  v.canonicalize();
  return GaussRational(v);
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw std::domain_error("GaussRational: division by zero");
  mpq_class n = norm();
  return {re / n, -im / n};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  mpq_class r = re * o.re - im * o.im;
  mpq_class i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussRational: division by zero");
  if (sgn(o.im) == 0) {
    re /= o.re;
    im /= o.re;
    return *this;
  }
  *this *= o.inverse();
  return *this;
}

std::string GaussRational::str() const {
  if (sgn(im) == 0) return re.get_str();
  if (sgn(re) == 0) return im.get_str() + "i";
  std::string s = re.get_str();
  if (sgn(im) > 0) s += "+";
  return s + im.get_str() + "i";
}

GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
GaussRational operator*(const GaussRational& a, const GaussRational& b) {
  GaussRational r = a;
  r *= b;
  return r;
}
GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }

bool operator==(const GaussRational& a, const GaussRational& b) {
  return cmp(a.re, b.re) == 0 && cmp(a.im, b.im) == 0;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.str(); }

} // namespace crtube
