#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>

namespace rml {

using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

/// Gaussian rational re + i*im, the coefficient field Q(i).
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(implicit)
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussRational(long v) : re(v), im(0) {}  // NOLINT(implicit)
  GaussRational(int v) : re(v), im(0) {}   // NOLINT(implicit)

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }
  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

std::string to_string(const GaussRational& z);

/// Exact scalar c * (2*pi*i)^k; the 2*pi*i token is never expanded numerically.
struct TokenScalar {
  GaussRational coeff;
  int twopii_power = 0;

  std::complex<double> to_complex() const;
  friend bool operator==(const TokenScalar& a, const TokenScalar& b) {
    return a.coeff == b.coeff && (a.coeff.is_zero() || a.twopii_power == b.twopii_power);
  }
};

std::string to_string(const TokenScalar& s);

/// Integer power of 2*pi*i as a complex double.
std::complex<double> twopii_pow(int k);

}  // namespace rml
