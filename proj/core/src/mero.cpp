#include "rml/mero.hpp"

#include "rml/error.hpp"

namespace rml {

LambdaPoly affine_poly(const AffineForm& f) {
  std::vector<GaussRational> c;
  c.reserve(f.arity());
  for (auto v : f.coeffs()) c.emplace_back(Rational(static_cast<long>(v)));
  return LambdaPoly::linear(c, GaussRational(Rational(static_cast<long>(f.constant()))));
}

MeroValue::MeroValue(LambdaPoly num, Denominator den, int twopii_power)
    : num_(std::move(num)), den_(std::move(den)), twopii_(twopii_power) {
  for (const auto& [f, m] : den_) {
    if (m <= 0) throw Error("BadMultiplicity", "denominator multiplicity must be positive");
    if (f.arity() != num_.nvars()) throw Error("ArityMismatch", "denominator form arity differs from numerator");
  }
  if (num_.is_zero()) den_.clear();
}

MeroValue MeroValue::constant(std::size_t nvars, const GaussRational& c, int twopii_power) {
  return MeroValue(LambdaPoly::constant(nvars, c), {}, twopii_power);
}

MeroValue MeroValue::from_poly(LambdaPoly p, int twopii_power) { return MeroValue(std::move(p), {}, twopii_power); }

MeroValue MeroValue::reciprocal(const std::vector<std::int64_t>& coeffs, std::int64_t constant) {
  std::int64_t scale = 1;
  AffineForm f = AffineForm::make(coeffs, constant, &scale);
  GaussRational c(make_rational(1, scale));
  return MeroValue(LambdaPoly::constant(coeffs.size(), c), {{f, 1}}, 0);
}

int MeroValue::multiplicity(const AffineForm& f) const {
  auto it = den_.find(f);
  return it == den_.end() ? 0 : it->second;
}

MeroValue MeroValue::reduced() const {
  MeroValue r = *this;
  if (r.num_.is_zero()) {
    r.den_.clear();
    return r;
  }
  for (auto it = r.den_.begin(); it != r.den_.end();) {
    std::vector<GaussRational> c;
    for (auto v : it->first.coeffs()) c.emplace_back(Rational(static_cast<long>(v)));
    GaussRational k(Rational(static_cast<long>(it->first.constant())));
    while (it->second > 0) {
      auto q = r.num_.divide_by_affine(c, k);
      if (!q) break;
      r.num_ = std::move(*q);
      --it->second;
    }
    if (it->second == 0) it = r.den_.erase(it);
    else ++it;
  }
  return r;
}

std::set<LinForm> MeroValue::origin_pole_forms() const {
  std::set<LinForm> out;
  for (const auto& [f, m] : den_)
    if (f.through_origin()) out.insert(f.linear_part());
  return out;
}

TokenScalar MeroValue::evaluate(const std::vector<GaussRational>& point) const {
  if (point.size() != nvars()) throw Error("ArityMismatch", "evaluation point has wrong length");
  GaussRational v = num_.evaluate(point);
  for (const auto& [f, m] : den_) {
    GaussRational d = f.evaluate_exact(point);
    if (d.is_zero()) throw Error("PoleAtPoint", "point lies on pole hyperplane " + f.to_string() + " = 0");
    for (int k = 0; k < m; ++k) v /= d;
  }
  return {v, twopii_};
}

std::complex<double> MeroValue::evaluate(const std::vector<std::complex<double>>& point) const {
  if (point.size() != nvars()) throw Error("ArityMismatch", "evaluation point has wrong length");
  std::complex<double> v = num_.evaluate(point);
  for (const auto& [f, m] : den_) {
    std::complex<double> d = f.evaluate(point);
    for (int k = 0; k < m; ++k) v /= d;
  }
  return v * twopii_pow(twopii_);
}

void MeroValue::combine(const MeroValue& o, bool subtract) {
  if (o.nvars() != nvars()) throw Error("ArityMismatch", "adding values over different lambda spaces");
  if (o.is_zero()) return;
  if (is_zero()) {
    *this = subtract ? -o : o;
    return;
  }
  if (o.twopii_ != twopii_)
    throw Error("TokenMismatch", "adding values with different powers of 2*pi*i");

  Denominator common = den_;
  for (const auto& [f, m] : o.den_) {
    auto& slot = common[f];
    slot = std::max(slot, m);
  }
  auto lift = [&](const MeroValue& v) {
    LambdaPoly n = v.num_;
    for (const auto& [f, m] : common) {
      const int missing = m - v.multiplicity(f);
      if (missing > 0) n *= affine_poly(f).pow(missing);
    }
    return n;
  };
  LambdaPoly a = lift(*this);
  LambdaPoly b = lift(o);
  num_ = subtract ? a - b : a + b;
  den_ = num_.is_zero() ? Denominator{} : std::move(common);
}

MeroValue& MeroValue::operator+=(const MeroValue& o) {
  combine(o, false);
  return *this;
}

MeroValue& MeroValue::operator-=(const MeroValue& o) {
  combine(o, true);
  return *this;
}

MeroValue& MeroValue::operator*=(const MeroValue& o) {
  if (o.nvars() != nvars()) throw Error("ArityMismatch", "multiplying values over different lambda spaces");
  num_ *= o.num_;
  twopii_ += o.twopii_;
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  for (const auto& [f, m] : o.den_) den_[f] += m;
  return *this;
}

MeroValue& MeroValue::operator*=(const GaussRational& s) {
  num_ *= s;
  if (num_.is_zero()) den_.clear();
  return *this;
}

bool same_function(const MeroValue& a, const MeroValue& b) {
  if (a.nvars() != b.nvars()) return false;
  if (!a.is_zero() && !b.is_zero() && a.twopii_ != b.twopii_) return false;
  MeroValue d = a;
  d -= b;
  return d.reduced().is_zero();
}

std::string MeroValue::to_string() const {
  if (is_zero()) return "0";
  std::string out = "(" + num_.to_string("l") + ")";
  if (!den_.empty()) {
    out += " / (";
    bool first = true;
    for (const auto& [f, m] : den_) {
      if (!first) out += " * ";
      first = false;
      out += "(" + f.to_string() + ")";
      if (m > 1) out += "^" + std::to_string(m);
    }
    out += ")";
  }
  if (twopii_ != 0) out += " * (2*pi*i)^" + std::to_string(twopii_);
  return out;
}

}  // namespace rml
