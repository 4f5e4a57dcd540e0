#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rml/rational.hpp"

namespace rml {

using IntMatrix = std::vector<std::vector<int>>;

/// Dimensions of a residue problem: n chart variables, p dbar-factors,
/// q principal-value factors, power N.
struct ProblemSignature {
  int n = 1;
  int p = 0;
  int q = 1;
  int N = 1;

  int num_lambdas() const { return p + q; }
  void validate() const;
  friend bool operator==(const ProblemSignature&, const ProblemSignature&) = default;
};

/// Compactly supported piecewise polynomial in t = |x|^2.  Piece j lives on
/// [knots[j], knots[j+1]] with ascending coefficients; zero past the last knot.
struct RadialProfile {
  std::vector<Rational> knots;
  std::vector<std::vector<Rational>> pieces;

  /// Single polynomial piece on [0, 1].
  static RadialProfile on_unit_interval(std::vector<Rational> coeffs);

  bool unit_supported() const;  // knots == {0, 1}
  bool is_zero() const;
  Rational value_at_zero() const;
  Rational support_end() const { return knots.empty() ? Rational(0) : knots.back(); }
  double evaluate(double t) const;
  /// Primitive-based integral of t^e * rho(t) over [lo, hi] in doubles (e >= 0 integer).
  double integrate_power(int e, double lo, double hi) const;

  void validate(const std::string& path) const;
  friend bool operator==(const RadialProfile&, const RadialProfile&) = default;
};

/// One per-variable factor x^a xbar^b rho(|x|^2).
struct VariableFactor {
  int a = 0;
  int b = 0;
  RadialProfile rho;
  friend bool operator==(const VariableFactor&, const VariableFactor&) = default;
};

struct TestFormTerm {
  GaussRational coeff;
  std::vector<VariableFactor> factors;  // one per chart variable
  std::vector<int> dbar_slots;          // 0-based, strictly increasing; carries dxbar_i
  friend bool operator==(const TestFormTerm&, const TestFormTerm&) = default;
};

/// Finite sum of terms coeff * prod_i x_i^a_i xbar_i^b_i rho_i(|x_i|^2) dx ^ dxbar_S.
struct SeparableTestForm {
  std::vector<TestFormTerm> terms;
  void validate(int n, int p, const std::string& path) const;
  friend bool operator==(const SeparableTestForm&, const SeparableTestForm&) = default;
};

/// One normal-crossings chart: f_t = x^alpha(t), g_s = x^beta(s), Jacobian
/// monomial x^jac with orientation sign.
struct ChartSpec {
  std::string name;
  IntMatrix alpha;  // p rows of length n
  IntMatrix beta;   // q rows of length n
  std::vector<int> jac;
  int sign = 1;
  std::vector<bool> units;  // p+q flags for formal invertible factors; empty = none
  bool unit_chart = false;

  int n() const { return static_cast<int>(jac.size()); }
  int p() const { return static_cast<int>(alpha.size()); }
  int q() const { return static_cast<int>(beta.size()); }

  /// Raw coefficients of mu_i = sum_t alpha(t)_i l_t + sum_s beta(s)_i l_{p+s}.
  std::vector<std::int64_t> column_form(int i) const;
  int column_sum(int i) const;
  bool unit_flag(int row) const { return !units.empty() && units.at(static_cast<std::size_t>(row)); }

  void validate(const ProblemSignature& sig, const std::string& path) const;
  friend bool operator==(const ChartSpec&, const ChartSpec&) = default;
};

/// Exact integer determinant of a square matrix (fraction-free elimination).
long long determinant(const IntMatrix& m);

/// K = { i : some beta(j)_i > 0 } (0-based), recomputed on every call.
std::set<int> derive_K(const ChartSpec& chart);

/// True when the form satisfies the smoothness that the division lemma
/// guarantees: for i in K, every term lacking dxbar_i has b_i >= 1.
bool is_k_smooth(const SeparableTestForm& form, const std::set<int>& K);

struct Scenario {
  ProblemSignature signature;
  std::vector<ChartSpec> charts;
  std::map<std::string, SeparableTestForm> testforms;
  std::map<std::string, std::string> metadata;

  const ChartSpec& chart(const std::string& name) const;
  const SeparableTestForm& testform(const std::string& name) const;
  void validate() const;
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Chart obtained by pulling a base chart back along the monomial map
/// x_k = prod_i z_i^{M[k][i]}; jac and sign come from the Jacobian
/// determinant det(M) * z^{sum_k M_k - 1}.
ChartSpec pullback_chart(const ChartSpec& base, const IntMatrix& M, const std::string& name);

}  // namespace rml
