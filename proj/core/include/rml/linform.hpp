#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rml/rational.hpp"

namespace rml {

/// Primitive integer linear form in lambda_1..lambda_k: nonzero, gcd 1,
/// first nonzero coefficient positive.  Only constructible via normalize().
class LinForm {
 public:
  LinForm() = default;

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::size_t arity() const { return coeffs_.size(); }
  std::int64_t operator[](std::size_t j) const { return coeffs_[j]; }

  /// Indices (0-based) of nonzero coefficients.
  std::vector<std::size_t> support() const;
  bool all_nonnegative() const;

  std::string to_string(const std::string& var = "l") const;

  friend auto operator<=>(const LinForm&, const LinForm&) = default;
  friend bool operator==(const LinForm&, const LinForm&) = default;

 private:
  friend LinForm normalize(const std::vector<std::int64_t>& raw);
  friend class AffineForm;
  std::vector<std::int64_t> coeffs_;
};

/// Unique primitive representative of the line through raw; throws
/// Error("ZeroForm") for the zero vector.
LinForm normalize(const std::vector<std::int64_t>& raw);

/// Returns i when f is the unit axis form e_i (0-based), nullopt otherwise.
std::optional<std::size_t> axis_proportional(const LinForm& f);

/// Affine integer form  L(lambda) + c  with nonzero linear part, normalized
/// so that gcd(coeffs, c) = 1 and the first nonzero coefficient is positive.
class AffineForm {
 public:
  AffineForm() = default;

  /// Normalizes raw = (coeffs, constant).  `scale` receives the positive or
  /// negative integer g with raw = g * result.
  static AffineForm make(const std::vector<std::int64_t>& coeffs, std::int64_t constant,
                         std::int64_t* scale = nullptr);
  static AffineForm from_linform(const LinForm& f) {
    AffineForm a;
    a.coeffs_ = f.coeffs();
    a.constant_ = 0;
    return a;
  }

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t constant() const { return constant_; }
  std::size_t arity() const { return coeffs_.size(); }
  bool through_origin() const { return constant_ == 0; }

  /// The homogeneous part, normalized.
  LinForm linear_part() const;

  template <class Value>
  Value evaluate(const std::vector<Value>& point) const {
    Value acc = Value(constant_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) acc += Value(coeffs_[j]) * point[j];
    return acc;
  }
  GaussRational evaluate_exact(const std::vector<GaussRational>& point) const;

  std::string to_string(const std::string& var = "l") const;

  friend auto operator<=>(const AffineForm&, const AffineForm&) = default;
  friend bool operator==(const AffineForm&, const AffineForm&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
  std::int64_t constant_ = 0;
};

std::string format_linear(const std::vector<std::int64_t>& coeffs, std::int64_t constant, const std::string& var);

}  // namespace rml
