#include "rml/linform.hpp"

#include <numeric>

#include "rml/error.hpp"

namespace rml {

namespace {

std::int64_t gcd_all(const std::vector<std::int64_t>& v, std::int64_t extra) {
  std::int64_t g = std::abs(extra);
  for (auto c : v) g = std::gcd(g, std::abs(c));
  return g;
}

std::int64_t leading_sign(const std::vector<std::int64_t>& v) {
  for (auto c : v) {
    if (c != 0) return c > 0 ? 1 : -1;
  }
  return 0;
}

}  // namespace

LinForm normalize(const std::vector<std::int64_t>& raw) {
  const std::int64_t s = leading_sign(raw);
  if (s == 0) throw Error("ZeroForm", "cannot normalize the zero linear form");
  const std::int64_t g = gcd_all(raw, 0) * s;
  LinForm f;
  f.coeffs_.reserve(raw.size());
  for (auto c : raw) f.coeffs_.push_back(c / g);
  return f;
}

std::vector<std::size_t> LinForm::support() const {
  std::vector<std::size_t> s;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) s.push_back(j);
  return s;
}

bool LinForm::all_nonnegative() const {
  for (auto c : coeffs_)
    if (c < 0) return false;
  return true;
}

std::optional<std::size_t> axis_proportional(const LinForm& f) {
  auto s = f.support();
  if (s.size() == 1 && f[s.front()] == 1) return s.front();
  return std::nullopt;
}

std::string format_linear(const std::vector<std::int64_t>& coeffs, std::int64_t constant, const std::string& var) {
  std::string out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const auto c = coeffs[j];
    if (c == 0) continue;
    if (out.empty()) {
      if (c == -1) out += "-";
      else if (c != 1) out += std::to_string(c) + "*";
    } else {
      out += c < 0 ? " - " : " + ";
      if (std::abs(c) != 1) out += std::to_string(std::abs(c)) + "*";
    }
    out += var + std::to_string(j + 1);
  }
  if (constant != 0 || out.empty()) {
    if (out.empty()) out += std::to_string(constant);
    else out += (constant < 0 ? " - " : " + ") + std::to_string(std::abs(constant));
  }
  return out;
}

std::string LinForm::to_string(const std::string& var) const { return format_linear(coeffs_, 0, var); }

AffineForm AffineForm::make(const std::vector<std::int64_t>& coeffs, std::int64_t constant, std::int64_t* scale) {
  const std::int64_t s = leading_sign(coeffs);
  if (s == 0) throw Error("ZeroForm", "affine form needs a nonzero linear part");
  const std::int64_t g = gcd_all(coeffs, constant) * s;
  AffineForm a;
  a.coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) a.coeffs_.push_back(c / g);
  a.constant_ = constant / g;
  if (scale) *scale = g;
  return a;
}

LinForm AffineForm::linear_part() const { return normalize(coeffs_); }

GaussRational AffineForm::evaluate_exact(const std::vector<GaussRational>& point) const {
  if (point.size() != coeffs_.size()) throw Error("ArityMismatch", "point has wrong length");
  GaussRational acc(Rational(static_cast<long>(constant_)));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) acc += GaussRational(Rational(static_cast<long>(coeffs_[j]))) * point[j];
  }
  return acc;
}

std::string AffineForm::to_string(const std::string& var) const { return format_linear(coeffs_, constant_, var); }

}  // namespace rml
