#include "rml/mellin.hpp"

#include <algorithm>
#include <map>

#include "rml/error.hpp"
#include "rml/leibniz.hpp"
#include "rml/parallel.hpp"

namespace rml {

namespace {

bool all_zero(const std::vector<std::int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

// int_0^1 t^(mu + shift) rho(t) dt = sum_d c_d / (mu + shift + d + 1).
MeroValue unit_moment(const std::vector<std::int64_t>& mu, int shift, const RadialProfile& rho) {
  if (!rho.unit_supported())
    throw Error("NonRationalProfile", "exact evaluation needs profiles with knots exactly {0, 1}");
  const std::size_t k = mu.size();
  MeroValue acc = MeroValue::zero(k);
  const auto& coeffs = rho.pieces.front();
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (sgn(coeffs[d]) == 0) continue;
    const std::int64_t constant = shift + static_cast<std::int64_t>(d) + 1;
    if (all_zero(mu)) {
      if (constant == 0) throw Error("DivergentIntegral", "radial integral diverges for all lambda");
      acc += MeroValue::constant(k, GaussRational(coeffs[d] / Rational(constant)));
    } else {
      acc += MeroValue::reciprocal(mu, constant) * GaussRational(coeffs[d]);
    }
  }
  return acc;
}

}  // namespace

MeroValue radial_integral(const std::vector<std::int64_t>& mu_coeffs, int c, const RadialProfile& rho) {
  if (c % 2 != 0) throw Error("OddShift", "radial shift c must be even");
  MeroValue v = unit_moment(mu_coeffs, c / 2, rho);
  // pi = (2 pi i) * (-i / 2)
  return v * MeroValue::constant(mu_coeffs.size(), GaussRational(Rational(0), Rational(-1, 2)), 1);
}

int form_sign(const std::vector<int>& I, int n, const std::vector<int>& S) {
  std::vector<int> seq;
  for (int i : I) seq.push_back(2 * i + 1);
  for (int i = 0; i < n; ++i) seq.push_back(2 * i);
  for (int i : S) seq.push_back(2 * i + 1);
  int inversions = 0;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

MeroValue gamma_exact(const Scenario& scenario, const std::string& chart_name) {
  const ChartSpec& chart = scenario.chart(chart_name);
  const SeparableTestForm& form = scenario.testform(chart_name);
  const int n = chart.n();
  const int p = chart.p();
  const std::size_t k = static_cast<std::size_t>(p + chart.q());
  const int N = scenario.signature.N;

  const std::vector<MeroTerm> expansion = expand(chart);
  const RankBasis rb = rank_basis(chart.alpha);
  if (rb.m < p) return MeroValue::zero(k);  // every p x p minor vanishes
  std::map<std::vector<int>, long long> dets;
  for (const auto& t : expansion) dets[t.subset] = t.detA;

  LambdaPoly lambda_product = LambdaPoly::constant(k, GaussRational(1));
  for (int t = 0; t < p; ++t) lambda_product *= LambdaPoly::variable(k, static_cast<std::size_t>(t));

  auto contribution = [&](const TestFormTerm& term) -> MeroValue {
    std::vector<int> I;
    for (int i = 0; i < n; ++i)
      if (std::find(term.dbar_slots.begin(), term.dbar_slots.end(), i) == term.dbar_slots.end()) I.push_back(i);
    auto it = dets.find(I);
    if (it == dets.end() || term.coeff.is_zero()) return MeroValue::zero(k);

    // Angular selection: the x-degree must equal the xbar-degree in every variable.
    std::vector<int> B(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const auto& f = term.factors[static_cast<std::size_t>(i)];
      const bool in_I = std::binary_search(I.begin(), I.end(), i);
      const int A = f.a + chart.jac[static_cast<std::size_t>(i)] - N * chart.column_sum(i);
      B[static_cast<std::size_t>(i)] = f.b - (in_I ? 1 : 0);
      if (A != B[static_cast<std::size_t>(i)]) return MeroValue::zero(k);
      if (f.rho.is_zero()) return MeroValue::zero(k);
    }

    GaussRational scalar = term.coeff;
    scalar *= GaussRational(static_cast<long>(chart.sign * it->second * form_sign(I, n, term.dbar_slots)));
    if (n % 2 == 1) scalar = -scalar;  // one factor -(2 pi i) per variable
    MeroValue v = MeroValue::from_poly(lambda_product * scalar, n);
    for (int i = 0; i < n; ++i)
      v *= unit_moment(chart.column_form(i), B[static_cast<std::size_t>(i)], term.factors[static_cast<std::size_t>(i)].rho);
    return v;
  };

  const std::vector<MeroValue> parts = parallel_map(form.terms.size(), [&](std::size_t j) { return contribution(form.terms[j]); });
  MeroValue total = MeroValue::zero(k);
  for (const auto& part : parts) total += part;
  return total.reduced();
}

MeroValue gamma_global(const Scenario& scenario) {
  MeroValue total = MeroValue::zero(static_cast<std::size_t>(scenario.signature.num_lambdas()));
  for (const auto& chart : scenario.charts) total += gamma_exact(scenario, chart.name);
  return total.reduced();
}

TokenScalar residue_on(const LinForm& form, const MeroValue& v, const std::vector<GaussRational>& point) {
  if (form.arity() != v.nvars()) throw Error("ArityMismatch", "form and value live in different lambda spaces");
  const AffineForm hyper = AffineForm::from_linform(form);
  if (!hyper.evaluate_exact(point).is_zero())
    throw Error("PointOffHyperplane", "point does not lie on " + form.to_string() + " = 0");
  const MeroValue r = v.reduced();
  const int mult = r.multiplicity(hyper);
  if (mult > 1)
    throw Error("HigherOrderPole", form.to_string() + " = 0 is a pole of order " + std::to_string(mult));
  if (mult == 0) return {GaussRational(0), r.twopii_power()};
  MeroValue::Denominator den = r.denominator();
  den.erase(hyper);
  return MeroValue(r.numerator(), den, r.twopii_power()).evaluate(point);
}

TokenScalar value_at_origin(const MeroValue& v) {
  const MeroValue r = v.reduced();
  const auto poles = r.origin_pole_forms();
  if (!poles.empty()) {
    std::string list;
    for (const auto& f : poles) list += (list.empty() ? "" : ", ") + f.to_string();
    throw Error("PoleAtOrigin", "poles through the origin: " + list);
  }
  return r.evaluate(std::vector<GaussRational>(r.nvars(), GaussRational(0)));
}

std::optional<Rational> extreme_pole(const MeroValue& v) {
  if (v.nvars() != 1) throw Error("ArityMismatch", "extreme_pole expects a single lambda variable");
  std::optional<Rational> best;
  const MeroValue r = v.reduced();
  for (const auto& [f, m] : r.denominator()) {
    const Rational root = make_rational(-f.constant(), f.coeffs()[0]);
    if (!best || root > *best) best = root;
  }
  return best;
}

}  // namespace rml
