#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "rml/poly.hpp"

namespace rml {

using FormIndex = std::vector<int>;  // strictly increasing, 0-based

/// Holomorphic polynomial differential form of fixed degree on C^n:
/// sum over basis dx_I of Q-polynomials in x_1..x_n.
class PolyForm {
 public:
  PolyForm() = default;
  PolyForm(int n, int degree) : n_(n), degree_(degree) {}

  /// c * dx_{idx[0]} ^ dx_{idx[1]} ^ ...; idx in any order, sorted with sign.
  static PolyForm basis(int n, const std::vector<int>& idx, const QPoly& c);
  static PolyForm function(const QPoly& c);

  int n() const { return n_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<FormIndex, QPoly>& terms() const { return terms_; }
  QPoly coefficient(const FormIndex& idx) const;

  /// Adds c * dx_idx (idx in any order).
  void add(std::vector<int> idx, const QPoly& c);

  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  PolyForm& operator*=(const Rational& s);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(PolyForm a, const Rational& s) { return a *= s; }
  friend bool operator==(const PolyForm& a, const PolyForm& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void check(const PolyForm& o) const;

  int n_ = 0;
  int degree_ = 0;
  std::map<FormIndex, QPoly> terms_;
};

/// Exterior product; a form of degree > n is returned as zero.
PolyForm wedge(const PolyForm& a, const PolyForm& b);

/// d(x^alpha) = sum_i alpha_i x^(alpha - e_i) dx_i.  Throws ZeroExponent.
PolyForm d_monomial(const std::vector<int>& alpha);

/// Sets x_i = 0 for i in S and drops every basis term containing dx_i, i in S.
PolyForm restrict_extend(const PolyForm& f, const std::set<int>& S);

/// sum over nonempty T subset K of (-1)^(|T|-1) restrict_extend(Psi, T).
PolyForm build_omega(const PolyForm& Psi, const std::set<int>& K);

/// For each j in K: every coefficient of Psi - omega on a basis term without
/// dx_j is divisible by x_j.
std::map<int, bool> check_property_i(const PolyForm& Psi, const PolyForm& omega, const std::set<int>& K);

/// d(x^alpha(1)) ^ ... ^ d(x^alpha(m)) ^ omega == 0, exactly.
bool check_property_ii(const PolyForm& omega, const std::vector<std::vector<int>>& alphas);

}  // namespace rml
