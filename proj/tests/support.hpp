#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <vector>

#include "rml/chart.hpp"
#include "rml/leibniz.hpp"
#include "rml/generators.hpp"
#include "rml/mero.hpp"

namespace rml::testing {

inline RadialProfile unit_profile(std::vector<Rational> coeffs) {
  return RadialProfile::on_unit_interval(std::move(coeffs));
}

inline ChartSpec chart(std::string name, IntMatrix alpha, IntMatrix beta, std::vector<int> jac, int sign = 1) {
  ChartSpec c;
  c.name = std::move(name);
  c.alpha = std::move(alpha);
  c.beta = std::move(beta);
  c.jac = std::move(jac);
  c.sign = sign;
  return c;
}

inline TestFormTerm term(GaussRational coeff, std::vector<VariableFactor> factors, std::vector<int> slots) {
  TestFormTerm t;
  t.coeff = std::move(coeff);
  t.factors = std::move(factors);
  t.dbar_slots = std::move(slots);
  return t;
}

inline Scenario single_chart(ProblemSignature sig, ChartSpec c, std::vector<TestFormTerm> terms) {
  Scenario s;
  s.signature = sig;
  const std::string name = c.name;
  s.charts.push_back(std::move(c));
  s.testforms[name].terms = std::move(terms);
  s.validate();
  return s;
}

/// f = x^k as a single principal-value factor, test x^a xbar^b rho dx ^ dxbar.
inline Scenario pv_power(int k, int N, int a, int b, std::vector<Rational> rho) {
  return single_chart({1, 0, 1, N}, chart("x", {}, {{k}}, {0}),
                      {term(GaussRational(1), {{a, b, unit_profile(std::move(rho))}}, {0})});
}

/// f = x^k as a single dbar-factor, test x^a xbar^b rho dx.
inline Scenario dbar_power(int k, int N, int a, int b, std::vector<Rational> rho) {
  return single_chart({1, 1, 0, N}, chart("x", {{k}}, {}, {0}),
                      {term(GaussRational(1), {{a, b, unit_profile(std::move(rho))}}, {})});
}

/// Random charts with n, p, q <= 4 and exponents <= 3 (p <= n; q >= 1 in
/// most cases), each with a K-smooth random test form.  Half of the
/// principal-value rows are thinned to one variable so that some columns
/// stay outside K and produce denominators.
inline std::vector<Scenario> random_chart_corpus(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<Scenario> out;
  while (static_cast<int>(out.size()) < count) {
    ChartShape shape;
    shape.n = rng.uniform(1, 4);
    shape.p = rng.uniform(0, std::min(shape.n, 4));
    shape.q = rng.uniform(shape.p == 0 ? 1 : 0, 4);
    if (rng.coin(0.8) && shape.q == 0) shape.q = 1;
    if (shape.p + shape.q > 6) continue;
    shape.max_exp = 3;
    Scenario s;
    s.signature = {shape.n, shape.p, shape.q, rng.uniform(1, 2)};
    ChartSpec c = random_chart(rng, shape, "c");
    for (auto& row : c.beta) {
      if (!rng.coin()) continue;
      std::vector<int> nz;
      for (int i = 0; i < shape.n; ++i)
        if (row[static_cast<std::size_t>(i)] > 0) nz.push_back(i);
      const int keep = nz[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(nz.size()) - 1))];
      for (int i = 0; i < shape.n; ++i)
        if (i != keep) row[static_cast<std::size_t>(i)] = 0;
    }
    s.charts.push_back(std::move(c));
    s.testforms["c"] = random_k_smooth_form(rng, s.charts.front(), s.signature.N, 2, 0.1);
    s.validate();
    out.push_back(std::move(s));
  }
  return out;
}

/// Denominators of `v` not accounted for by `cert`: a hyperplane through
/// the origin must be a certificate form; any other must stay clear of the
/// half space Re l_j > -eps (nonnegative coefficients, constant >= eps * sum).
inline std::vector<AffineForm> uncovered_denominators(const PoleCertificate& cert, const MeroValue& v) {
  std::vector<AffineForm> bad;
  const MeroValue r = v.reduced();
  for (const auto& [f, m] : r.denominator()) {
    if (f.through_origin()) {
      if (!cert.forms.count(f.linear_part())) bad.push_back(f);
      continue;
    }
    std::int64_t sum = 0;
    bool nonneg = true;
    for (auto c : f.coeffs()) {
      nonneg = nonneg && c >= 0;
      sum += c;
    }
    if (!nonneg || Rational(f.constant()) < cert.halfspace.eps * Rational(sum)) bad.push_back(f);
  }
  return bad;
}

/// Single-chart scenarios with n <= 2 for the quadrature cross-check.
inline std::vector<Scenario> small_quadrature_corpus(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<Scenario> out;
  while (static_cast<int>(out.size()) < count) {
    ChartShape shape;
    shape.n = rng.uniform(1, 2);
    shape.p = rng.uniform(0, shape.n);
    shape.q = rng.uniform(shape.p == 0 ? 1 : 0, 2);
    shape.max_exp = 2;
    out.push_back(random_scenario(rng, shape, rng.uniform(1, 2), 2));
  }
  return out;
}

/// Relative agreement, or absolute when the exact value vanishes.
inline bool quadrature_agrees(std::complex<double> numeric, std::complex<double> exact, double tol) {
  if (exact == std::complex<double>(0.0)) return std::abs(numeric) <= tol;
  return std::abs(numeric - exact) <= tol * std::abs(exact);
}

inline double rel_diff(std::complex<double> a, std::complex<double> b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace rml::testing
