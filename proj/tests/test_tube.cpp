#include <gtest/gtest.h>

#include <numbers>

#include "rml/builtin.hpp"
#include "rml/error.hpp"
#include "rml/mellin.hpp"
#include "rml/scenario_io.hpp"
#include "rml/tube.hpp"
#include "support.hpp"

using namespace rml;

namespace {

const std::complex<double> kTwoPiI(0.0, 2.0 * std::numbers::pi);

Scenario data(const std::string& file) { return load_scenario(std::string(RML_DATA_DIR) + "/" + file); }

TubeSpec spec_of(const Scenario& s) { return tube_spec_from(s, s.charts.front().name); }

const SeparableTestForm& form_of(const Scenario& s) { return s.testform(s.charts.front().name); }

// Orientation of the iterated Mellin transform relative to the residue
// normalization: sigma = (-1)^(p(p-1)/2).
double sigma(int p) { return (p * (p - 1) / 2) % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

TEST(TubeIntegral, PrincipalValueClosedForm) {
  const Scenario s = data("pv_q1.json");
  for (double eps : {0.0, 0.1, 0.25, 0.9}) {
    const auto v = tube_integral(spec_of(s), form_of(s), {eps});
    EXPECT_LT(std::abs(v - (-kTwoPiI * (1.0 - eps))), 1e-12) << "eps=" << eps;
  }
  EXPECT_LT(std::abs(tube_integral(spec_of(s), form_of(s), {1.5})), 1e-15);
}

TEST(TubeIntegral, CauchyCircle) {
  const Scenario s = data("cauchy_p1.json");
  for (double eps : {0.25, 1e-3, 1e-8}) {
    const auto v = tube_integral(spec_of(s), form_of(s), {eps});
    EXPECT_LT(std::abs(v - kTwoPiI * (1.0 - eps) * (1.0 - eps)), 1e-12);
  }
}

TEST(TubeIntegral, MultiplicativeAcrossVariables) {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int p = rng.uniform(0, 2), q = rng.uniform(p == 0 ? 1 : 0, 2);
    Scenario s = random_diagonal_scenario(rng, p, q, 3, 1);
    const TubeSpec spec = spec_of(s);
    std::vector<double> eps;
    for (int j = 0; j < p + q; ++j) eps.push_back(rng.uniform(1, 9) / 20.0);
    const auto& term = form_of(s).terms.front();
    std::complex<double> product = term.coeff.to_complex() * sigma(q);
    for (const auto& f : tube_variable_factors(spec, term, eps)) product *= f;
    EXPECT_LT(rml::testing::rel_diff(tube_integral(spec, form_of(s), eps), product), 1e-12);
  }
}

TEST(TubeSpec, NonDiagonalRejected) {
  const Scenario s = builtin_example3();
  try {
    tube_spec_from(s, "z");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "UnsupportedTube");
  }
}

TEST(AdmissiblePath, RatioCondition) {
  AdmissiblePath path;
  const auto eps = path.eps_at(0.5, 3);
  ASSERT_EQ(eps.size(), 3u);
  EXPECT_DOUBLE_EQ(eps[0], std::pow(0.5, 100.0));
  EXPECT_DOUBLE_EQ(eps[1], std::pow(0.5, 10.0));
  EXPECT_DOUBLE_EQ(eps[2], 0.5);
}

TEST(AdmissibleLimit, ClosedForms) {
  const Scenario pv = data("pv_q1.json");
  const auto a = admissible_limit(spec_of(pv), form_of(pv), {});
  EXPECT_TRUE(a.converged);
  EXPECT_LT(std::abs(a.value + kTwoPiI), 1e-8);
  const Scenario cauchy = data("cauchy_p1.json");
  const auto b = admissible_limit(spec_of(cauchy), form_of(cauchy), {});
  EXPECT_LT(std::abs(b.value - kTwoPiI), 1e-8);
}

TEST(AdmissibleLimit, MatchesValueAtOriginOnRandomDiagonals) {
  Rng rng(2718);
  for (int trial = 0; trial < 10; ++trial) {
    const int p = rng.uniform(0, 2), q = rng.uniform(p == 0 ? 1 : 0, 2);
    const Scenario s = random_diagonal_scenario(rng, p, q, 3, 2);
    const auto limit = admissible_limit(spec_of(s), form_of(s), {});
    const auto exact = value_at_origin(gamma_exact(s, "d")).to_complex() * sigma(p);
    EXPECT_TRUE(rml::testing::quadrature_agrees(limit.value, exact, 1e-6))
        << "p=" << p << " q=" << q << ": " << limit.value << " vs " << exact;
  }
}

TEST(MellinCheck, PrincipalValueOfX) {
  const Scenario s = data("pv_q1.json");
  const auto r = mellin_check(s, "x", {{3.0}, {5.0}});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.resolved_sign, 1);
  for (const auto& pt : r.points) EXPECT_LT(pt.rel_error, 1e-6);
}

TEST(MellinCheck, DiagonalPair) {
  const Scenario s = data("diag_p1q1.json");
  const auto r = mellin_check(s, "d", {{3.0, 3.0}});
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.points.at(0).rel_error, 1e-6);
}

TEST(MellinCheck, TwoResidueFactorsFlipSign) {
  const Scenario s = data("diag_p2.json");
  const auto r = mellin_check(s, s.charts.front().name, {{3.0, 4.0}, {2.5, 3.5}});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.resolved_sign, -1);
}

TEST(MellinCheck, ZeroFormBothSidesVanish) {
  Scenario s = data("pv_q1.json");
  s.testforms["x"].terms.clear();
  const auto r = mellin_check(s, "x", {{3.0}});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.points.at(0).sign, 0);
}
