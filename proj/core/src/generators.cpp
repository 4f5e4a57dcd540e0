#include "rml/generators.hpp"

#include <algorithm>
#include <numeric>

namespace rml {

Rational Rng::rational(int max_num, int max_den) { return make_rational(uniform(-max_num, max_num), uniform(1, max_den)); }

Rational Rng::nonzero_rational(int max_num, int max_den) {
  Rational r;
  do r = rational(max_num, max_den);
  while (sgn(r) == 0);
  return r;
}

std::vector<int> Rng::subset(int n, int size) {
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), engine_);
  all.resize(static_cast<std::size_t>(size));
  std::sort(all.begin(), all.end());
  return all;
}

ChartSpec random_chart(Rng& rng, const ChartShape& shape, const std::string& name) {
  ChartSpec c;
  c.name = name;
  auto row = [&](bool nonzero) {
    std::vector<int> r(static_cast<std::size_t>(shape.n));
    do {
      for (auto& v : r) v = rng.coin(0.5) ? rng.uniform(1, shape.max_exp) : 0;
    } while (nonzero && std::all_of(r.begin(), r.end(), [](int v) { return v == 0; }));
    return r;
  };
  for (int t = 0; t < shape.p; ++t) c.alpha.push_back(row(true));
  for (int s = 0; s < shape.q; ++s) c.beta.push_back(row(true));
  c.jac.resize(static_cast<std::size_t>(shape.n));
  for (auto& v : c.jac) v = rng.uniform(0, 2);
  c.sign = rng.coin() ? 1 : -1;
  return c;
}

RadialProfile random_unit_profile(Rng& rng, int max_degree) {
  std::vector<Rational> coeffs;
  const int deg = rng.uniform(0, max_degree);
  for (int d = 0; d <= deg; ++d) coeffs.push_back(rng.rational());
  coeffs[0] = rng.nonzero_rational();
  return RadialProfile::on_unit_interval(std::move(coeffs));
}

SeparableTestForm random_k_smooth_form(Rng& rng, const ChartSpec& chart, int N, int terms, double noise) {
  const std::set<int> K = derive_K(chart);
  const int n = chart.n();
  SeparableTestForm form;
  for (int t = 0; t < terms; ++t) {
    TestFormTerm term;
    term.coeff = GaussRational(rng.rational(), rng.rational());
    if (term.coeff.is_zero()) term.coeff = GaussRational(1);
    term.dbar_slots = rng.subset(n, n - chart.p());
    for (int i = 0; i < n; ++i) {
      const bool slot = std::binary_search(term.dbar_slots.begin(), term.dbar_slots.end(), i);
      VariableFactor f;
      f.b = rng.uniform((K.count(i) && !slot) ? 1 : 0, 2);
      // selection: a + jac - N c = b - [i carries no slot]
      int a = f.b - (slot ? 0 : 1) - chart.jac[static_cast<std::size_t>(i)] + N * chart.column_sum(i);
      if (a < 0) {
        f.b -= a;
        a = 0;
      }
      f.a = rng.coin(noise) ? rng.uniform(0, 4) : a;
      f.rho = random_unit_profile(rng);
      term.factors.push_back(std::move(f));
    }
    form.terms.push_back(std::move(term));
  }
  return form;
}

Scenario random_scenario(Rng& rng, const ChartShape& shape, int N, int terms) {
  Scenario s;
  s.signature = {shape.n, shape.p, shape.q, N};
  s.charts.push_back(random_chart(rng, shape, "c"));
  s.testforms["c"] = random_k_smooth_form(rng, s.charts.front(), N, terms);
  s.validate();
  return s;
}

Scenario random_diagonal_scenario(Rng& rng, int p, int q, int max_k, int terms) {
  const int n = p + q;
  Scenario s;
  s.signature = {n, p, q, 1};
  ChartSpec c;
  c.name = "d";
  for (int j = 0; j < n; ++j) {
    std::vector<int> row(static_cast<std::size_t>(n), 0);
    row[static_cast<std::size_t>(j)] = rng.uniform(1, max_k);
    (j < p ? c.alpha : c.beta).push_back(row);
  }
  c.jac.assign(static_cast<std::size_t>(n), 0);
  s.charts.push_back(c);
  SeparableTestForm form;
  for (int t = 0; t < terms; ++t) {
    TestFormTerm term;
    term.coeff = GaussRational(rng.nonzero_rational());
    for (int j = p; j < n; ++j) term.dbar_slots.push_back(j);
    for (int j = 0; j < n; ++j) {
      const int k = j < p ? c.alpha[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)]
                          : c.beta[static_cast<std::size_t>(j - p)][static_cast<std::size_t>(j)];
      VariableFactor f;
      f.b = rng.coin(0.7) ? 0 : 1;
      f.a = j < p ? f.b + k - 1 : f.b + k;
      f.rho = random_unit_profile(rng);
      term.factors.push_back(std::move(f));
    }
    form.terms.push_back(std::move(term));
  }
  s.testforms["d"] = form;
  s.validate();
  return s;
}

PolyForm random_polyform(Rng& rng, int n, int degree, int max_terms, int max_exp) {
  PolyForm f(n, degree);
  const int count = rng.uniform(1, max_terms);
  for (int t = 0; t < count; ++t) {
    QPoly c(static_cast<std::size_t>(n));
    const int monos = rng.uniform(1, 3);
    for (int m = 0; m < monos; ++m) {
      Exponents e(static_cast<std::size_t>(n));
      for (auto& v : e) v = rng.coin(0.4) ? rng.uniform(1, max_exp) : 0;
      c.add_term(e, rng.nonzero_rational());
    }
    f.add(rng.subset(n, degree), c);
  }
  return f;
}

PolyForm complete_intersection_psi(Rng& rng, int n, int degree, const std::vector<std::vector<int>>& alphas,
                                   const std::set<int>& K) {
  PolyForm psi(n, degree);
  if (degree >= 1) {
    for (const auto& a : alphas) psi += wedge(d_monomial(a), random_polyform(rng, n, degree - 1));
  }
  Exponents xk(static_cast<std::size_t>(n), 0);
  for (int j : K) xk[static_cast<std::size_t>(j)] = 1;
  QPoly monomial(static_cast<std::size_t>(n));
  monomial.add_term(xk, Rational(1));
  PolyForm theta = random_polyform(rng, n, degree);
  for (const auto& [idx, c] : theta.terms()) psi.add(idx, c * monomial);
  return psi;
}

}  // namespace rml
