#pragma once

#include <complex>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rml/linform.hpp"
#include "rml/poly.hpp"
#include "rml/rational.hpp"

namespace rml {

/// Exact meromorphic value  num(lambda) / prod den_k(lambda)^{m_k} * (2 pi i)^k
/// with num over Q(i) and every den_k a normalized affine form.
class MeroValue {
 public:
  using Denominator = std::map<AffineForm, int>;

  MeroValue() = default;
  explicit MeroValue(std::size_t nvars) : num_(nvars) {}
  MeroValue(LambdaPoly num, Denominator den, int twopii_power);

  static MeroValue zero(std::size_t nvars) { return MeroValue(nvars); }
  static MeroValue constant(std::size_t nvars, const GaussRational& c, int twopii_power = 0);
  static MeroValue from_poly(LambdaPoly p, int twopii_power = 0);
  /// 1 / (sum coeffs_j lambda_j + constant); the raw form is normalized and
  /// its integer content moved into the numerator.
  static MeroValue reciprocal(const std::vector<std::int64_t>& coeffs, std::int64_t constant);

  std::size_t nvars() const { return num_.nvars(); }
  const LambdaPoly& numerator() const { return num_; }
  const Denominator& denominator() const { return den_; }
  int twopii_power() const { return twopii_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Cancels every denominator form dividing the numerator (idempotent).
  MeroValue reduced() const;

  /// Distinct denominator forms through the origin (homogeneous), i.e. the
  /// pole hyperplanes passing through lambda = 0.
  std::set<LinForm> origin_pole_forms() const;
  int multiplicity(const AffineForm& f) const;

  TokenScalar evaluate(const std::vector<GaussRational>& point) const;
  std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;

  MeroValue& operator+=(const MeroValue& o);
  MeroValue& operator-=(const MeroValue& o);
  MeroValue& operator*=(const MeroValue& o);
  MeroValue& operator*=(const GaussRational& s);

  friend MeroValue operator+(MeroValue a, const MeroValue& b) { return a += b; }
  friend MeroValue operator-(MeroValue a, const MeroValue& b) { return a -= b; }
  friend MeroValue operator*(MeroValue a, const MeroValue& b) { return a *= b; }
  friend MeroValue operator*(MeroValue a, const GaussRational& s) { return a *= s; }
  friend MeroValue operator-(MeroValue a) { return a *= GaussRational(-1); }

  /// Exact equality as functions of lambda.
  friend bool same_function(const MeroValue& a, const MeroValue& b);

  std::string to_string() const;

 private:
  void combine(const MeroValue& o, bool subtract);

  LambdaPoly num_;
  Denominator den_;
  int twopii_ = 0;
};

LambdaPoly affine_poly(const AffineForm& f);

}  // namespace rml
