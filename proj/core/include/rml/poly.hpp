#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rml/error.hpp"
#include "rml/rational.hpp"

namespace rml {

using Exponents = std::vector<int>;

inline bool coeff_is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const GaussRational& c) { return c.is_zero(); }

/// Sparse multivariate polynomial with exact coefficients.  Zero terms are
/// never stored, so structural equality is value equality.
template <class Coeff>
class SparsePoly {
 public:
  using Terms = std::map<Exponents, Coeff>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, const Coeff& c) {
    SparsePoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  /// The polynomial x_var (0-based).
  static SparsePoly variable(std::size_t nvars, std::size_t var) {
    SparsePoly p(nvars);
    Exponents e(nvars, 0);
    e.at(var) = 1;
    p.add_term(e, Coeff(1));
    return p;
  }

  /// sum_j coeffs[j] x_j + constant.
  static SparsePoly linear(const std::vector<Coeff>& coeffs, const Coeff& constant) {
    SparsePoly p(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      Exponents e(coeffs.size(), 0);
      e[j] = 1;
      p.add_term(e, coeffs[j]);
    }
    p.add_term(Exponents(coeffs.size(), 0), constant);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponents& e, const Coeff& c) {
    if (e.size() != nvars_) throw Error("ArityMismatch", "exponent vector length differs from variable count");
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  Coeff coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int v : e) s += v;
      d = std::max(d, s);
    }
    return d;
  }

  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly& operator*=(const Coeff& s) {
    if (coeff_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend SparsePoly operator*(SparsePoly a, const Coeff& s) { return a *= s; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_arity(b);
    SparsePoly r(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  SparsePoly pow(int k) const {
    SparsePoly r = constant(nvars_, Coeff(1));
    for (int j = 0; j < k; ++j) r *= *this;
    return r;
  }

  template <class Value>
  Value evaluate(const std::vector<Value>& point) const {
    if (point.size() != nvars_) throw Error("ArityMismatch", "evaluation point has wrong length");
    Value acc{};
    for (const auto& [e, c] : terms_) {
      Value term = lift<Value>(c);
      for (std::size_t j = 0; j < e.size(); ++j)
        for (int k = 0; k < e[j]; ++k) term *= point[j];
      acc += term;
    }
    return acc;
  }

  /// Sets x_var := value (a constant), keeping the arity.
  SparsePoly substitute_constant(std::size_t var, const Coeff& value) const {
    SparsePoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      Coeff t = c;
      for (int k = 0; k < e[var]; ++k) t *= value;
      Exponents f = e;
      f[var] = 0;
      r.add_term(f, t);
    }
    return r;
  }

  /// Exact division by the affine form sum_j coeffs[j] x_j + constant, by
  /// synthetic division in the last variable with a nonzero coefficient.
  /// Returns nullopt when the form does not divide this polynomial.
  std::optional<SparsePoly> divide_by_affine(const std::vector<Coeff>& coeffs, const Coeff& constant) const {
    if (coeffs.size() != nvars_) throw Error("ArityMismatch", "affine form has wrong length");
    std::size_t pivot = nvars_;
    for (std::size_t j = nvars_; j-- > 0;) {
      if (!coeff_is_zero(coeffs[j])) {
        pivot = j;
        break;
      }
    }
    if (pivot == nvars_) {
      if (coeff_is_zero(constant)) throw Error("ZeroForm", "division by the zero form");
      SparsePoly q = *this;
      Coeff inv = Coeff(1) / constant;
      q *= inv;
      return q;
    }
    if (is_zero()) return SparsePoly(nvars_);

    // rest = form - coeffs[pivot] * x_pivot
    std::vector<Coeff> rest_coeffs = coeffs;
    rest_coeffs[pivot] = Coeff(0);
    const SparsePoly rest = linear(rest_coeffs, constant);
    const Coeff inv_lead = Coeff(1) / coeffs[pivot];

    std::map<int, SparsePoly> slices;
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      f[pivot] = 0;
      auto [it, ins] = slices.try_emplace(e[pivot], SparsePoly(nvars_));
      it->second.add_term(f, c);
    }
    const int deg = slices.rbegin()->first;
    if (deg == 0) return std::nullopt;

    std::vector<SparsePoly> quot(static_cast<std::size_t>(deg), SparsePoly(nvars_));
    auto slice = [&](int e) {
      auto it = slices.find(e);
      return it == slices.end() ? SparsePoly(nvars_) : it->second;
    };
    quot[deg - 1] = slice(deg) * inv_lead;
    for (int e = deg - 1; e >= 1; --e) {
      quot[e - 1] = (slice(e) - rest * quot[e]) * inv_lead;
    }
    if (!(slice(0) - rest * quot[0]).is_zero()) return std::nullopt;

    SparsePoly q(nvars_);
    for (int e = 0; e < deg; ++e) {
      for (const auto& [f, c] : quot[e].terms()) {
        Exponents g = f;
        g[pivot] += e;
        q.add_term(g, c);
      }
    }
    return q;
  }

  std::string to_string(const std::string& var_prefix = "x") const;

 private:
  template <class Value>
  static Value lift(const Coeff& c) {
    if constexpr (std::is_same_v<Coeff, GaussRational> && std::is_same_v<Value, std::complex<double>>) {
      return c.to_complex();
    } else if constexpr (std::is_same_v<Coeff, Rational> && std::is_same_v<Value, double>) {
      return to_double(c);
    } else if constexpr (std::is_same_v<Coeff, Rational> && std::is_same_v<Value, std::complex<double>>) {
      return std::complex<double>(to_double(c), 0.0);
    } else {
      return Value(c);
    }
  }

  void check_arity(const SparsePoly& o) const {
    if (o.nvars_ != nvars_) throw Error("ArityMismatch", "polynomials over different variable counts");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

using LambdaPoly = SparsePoly<GaussRational>;
using QPoly = SparsePoly<Rational>;

std::string format_monomial(const Exponents& e, const std::string& var_prefix);

template <class Coeff>
std::string SparsePoly<Coeff>::to_string(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out += " + ";
    first = false;
    std::string mono = format_monomial(it->first, var_prefix);
    std::string c = rml::to_string(it->second);
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else {
      out += c + "*" + mono;
    }
  }
  return out;
}

}  // namespace rml
