#include "rml/builtin.hpp"

#include <random>

#include "rml/error.hpp"

namespace rml {

namespace {

using Coeffs = std::vector<Rational>;

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Coeffs derivative(const Coeffs& a) {
  Coeffs r;
  for (std::size_t d = 1; d < a.size(); ++d) r.push_back(a[d] * static_cast<long>(d));
  if (r.empty()) r.push_back(Rational(0));
  return r;
}

Coeffs shifted(const Coeffs& a, int d) {
  Coeffs r(static_cast<std::size_t>(d), Rational(0));
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

Coeffs monomial(int d) { return shifted({Rational(1)}, d); }

RadialProfile unit(const Coeffs& c) { return RadialProfile::on_unit_interval(c); }

// (1 - t)^2 * P(t): C^1 at the support edge t = 1.
Coeffs bump(const Coeffs& P) { return multiply({Rational(1), Rational(-2), Rational(1)}, P); }

Coeffs random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  Coeffs c;
  for (int d = 0; d <= degree; ++d) c.push_back(make_rational(num(rng), den(rng)));
  while (sgn(c[0]) == 0) c[0] = make_rational(num(rng), den(rng));
  return c;
}

ChartSpec make_chart(std::string name, IntMatrix alpha, IntMatrix beta, std::vector<int> jac, int sign) {
  ChartSpec c;
  c.name = std::move(name);
  c.alpha = std::move(alpha);
  c.beta = std::move(beta);
  c.jac = std::move(jac);
  c.sign = sign;
  return c;
}

ChartSpec base_chart() { return make_chart("x", {{0, 1, 0}, {0, 0, 1}}, {{1, 0, 0}}, {0, 0, 0}, 1); }

// phi1(x1) * phi2(z2) * phi3(z2 z3) restricted to |z3| <= 1, expanded in the
// monomials of the composite argument.  `inner` is the profile evaluated on
// the composite argument, `outer` the one depending on the repeated variable.
SeparableTestForm blown_up_form(const Example3Profiles& pr, const Coeffs& outer, const Coeffs& inner) {
  SeparableTestForm form;
  const Coeffs h1 = derivative(pr.h);
  for (std::size_t d = 0; d < inner.size(); ++d) {
    if (sgn(inner[d]) == 0) continue;
    TestFormTerm term;
    term.coeff = GaussRational(inner[d]);
    term.factors.push_back({1, 0, unit(h1)});
    term.factors.push_back({0, 0, unit(multiply(outer, monomial(static_cast<int>(d))))});
    term.factors.push_back({0, 0, unit(monomial(static_cast<int>(d)))});
    term.dbar_slots = {0};
    form.terms.push_back(std::move(term));
  }
  return form;
}

Rational at_zero(const Coeffs& c) { return c.empty() ? Rational(0) : c[0]; }

}  // namespace

IntMatrix example3_map_z() { return {{1, 0, 0}, {0, 1, 0}, {0, 1, 1}}; }
IntMatrix example3_map_zeta() { return {{1, 0, 0}, {0, 1, 1}, {0, 1, 0}}; }

Example3Profiles example3_profiles(const Example3Options& opts) {
  if (opts.profile_degree < 2) throw Error("BadProfileDegree", "profile degree must be at least 2");
  Example3Profiles pr;
  if (!opts.seed) {
    pr.h = pr.g2 = pr.g3 = bump({Rational(1)});
    return pr;
  }
  std::mt19937_64 rng(*opts.seed);
  const int deg = opts.profile_degree - 2;
  pr.h = bump(random_poly(rng, deg));
  pr.g2 = bump(random_poly(rng, deg));
  pr.g3 = bump(random_poly(rng, deg));
  return pr;
}

Scenario builtin_example3(const Example3Options& opts) {
  return builtin_example3(example3_profiles(opts), opts.drop_zeta);
}

Scenario builtin_example3(const Example3Profiles& pr, bool drop_zeta) {
  Scenario s;
  s.signature = {3, 2, 1, 1};
  const ChartSpec base = base_chart();
  s.charts.push_back(pullback_chart(base, example3_map_z(), "z"));
  s.testforms["z"] = blown_up_form(pr, pr.g2, pr.g3);
  if (!drop_zeta) {
    s.charts.push_back(pullback_chart(base, example3_map_zeta(), "zeta"));
    s.testforms["zeta"] = blown_up_form(pr, pr.g3, pr.g2);
  }
  s.metadata["lambda_labels"] = "l1:x2 l2:x3 l3:x1";
  s.validate();
  return s;
}

Scenario example3_base_scenario(const Example3Profiles& pr) {
  Scenario s;
  s.signature = {3, 2, 1, 1};
  s.charts.push_back(base_chart());
  TestFormTerm term;
  term.coeff = GaussRational(1);
  term.factors = {{1, 0, unit(derivative(pr.h))}, {0, 0, unit(pr.g2)}, {0, 0, unit(pr.g3)}};
  term.dbar_slots = {0};
  s.testforms["x"].terms.push_back(std::move(term));
  s.metadata["lambda_labels"] = "l1:x2 l2:x3 l3:x1";
  s.validate();
  return s;
}

Scenario example3_ibp_scenario(const Example3Profiles& pr) {
  Scenario s;
  s.signature = {3, 0, 3, 1};
  s.charts.push_back(make_chart("x", {}, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, {0, 0, 0}, 1));
  TestFormTerm term;
  term.coeff = GaussRational(1);
  term.factors = {{1, 0, unit(derivative(pr.h))}, {1, 0, unit(derivative(pr.g2))}, {1, 0, unit(derivative(pr.g3))}};
  term.dbar_slots = {0, 1, 2};
  s.testforms["x"].terms.push_back(std::move(term));
  s.metadata["lambda_labels"] = "l1:x2 l2:x3 l3:x1";
  s.validate();
  return s;
}

Rational example3_expected_coefficient(const Example3Profiles& pr) {
  return -at_zero(pr.h) * at_zero(pr.g2) * at_zero(pr.g3);
}

}  // namespace rml
