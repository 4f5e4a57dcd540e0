#include "rml/rational.hpp"

#include <numbers>

#include "rml/error.hpp"

namespace rml {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("ZeroDenominator", "rational with zero denominator");
  Rational q{mpz_class(std::to_string(num)), mpz_class(std::to_string(den))};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  Rational n = o.norm2();
  if (sgn(n) == 0) throw Error("DivisionByZero", "division by zero in Q(i)");
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

std::string to_string(const GaussRational& z) {
  if (sgn(z.im) == 0) return z.re.get_str();
  if (sgn(z.re) == 0) return z.im.get_str() + "i";
  std::string s = z.re.get_str();
  s += sgn(z.im) < 0 ? "-" : "+";
  s += Rational(abs(z.im)).get_str() + "i";
  return "(" + s + ")";
}

std::complex<double> twopii_pow(int k) {
  std::complex<double> base(0.0, 2.0 * std::numbers::pi);
  std::complex<double> r(1.0, 0.0);
  if (k >= 0) {
    for (int j = 0; j < k; ++j) r *= base;
  } else {
    for (int j = 0; j < -k; ++j) r /= base;
  }
  return r;
}

std::complex<double> TokenScalar::to_complex() const { return coeff.to_complex() * twopii_pow(twopii_power); }

std::string to_string(const TokenScalar& s) {
  if (s.coeff.is_zero()) return "0";
  if (s.twopii_power == 0) return to_string(s.coeff);
  return to_string(s.coeff) + "*(2*pi*i)^" + std::to_string(s.twopii_power);
}

}  // namespace rml
