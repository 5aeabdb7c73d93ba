#pragma once

#include <complex>
#include <gmpxx.h>
#include <ostream>
#include <string>

namespace crtube {

/// Exact complex number re + i*im with arbitrary-precision rational parts.
class GaussRational {
public:
  mpq_class re{0};
  mpq_class im{0};

  GaussRational() = default;
  GaussRational(long r) : re(r) {}
  GaussRational(int r) : re(r) {}
  GaussRational(const mpq_class& r) : re(r) {}
  GaussRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
  GaussRational(long r, long i) : re(r), im(i) {}

  static GaussRational I() { return {0L, 1L}; }
  /// p/q as a real Gaussian rational.
  static GaussRational frac(long p, long q);

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  bool is_imaginary() const { return sgn(re) == 0; }
  /// |z|^2, always a nonnegative rational.
  mpq_class norm() const { return re * re + im * im; }
  GaussRational conj() const { return {re, -im}; }
  GaussRational inverse() const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  std::string str() const;
};

GaussRational operator+(GaussRational a, const GaussRational& b);
GaussRational operator-(GaussRational a, const GaussRational& b);
GaussRational operator*(const GaussRational& a, const GaussRational& b);
GaussRational operator/(GaussRational a, const GaussRational& b);
GaussRational operator-(const GaussRational& a);
bool operator==(const GaussRational& a, const GaussRational& b);
inline bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
std::ostream& operator<<(std::ostream& os, const GaussRational& z);

} // namespace crtube
