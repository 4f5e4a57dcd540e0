#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rml/builtin.hpp"
#include "rml/error.hpp"
#include "rml/mellin.hpp"
#include "rml/quadrature.hpp"
#include "rml/scenario_io.hpp"
#include "support.hpp"

using namespace rml;
using rml::testing::pv_power;
using rml::testing::rel_diff;
using rml::testing::unit_profile;

namespace {

const GaussRational kHalfMinusI(Rational(0), make_rational(-1, 2));  // pi = (2 pi i)(-i/2)

std::string code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

Scenario data(const std::string& file) { return load_scenario(std::string(RML_DATA_DIR) + "/" + file); }

std::complex<double> at(const MeroValue& v, std::vector<std::complex<double>> pt) { return v.evaluate(pt); }

}  // namespace

TEST(RadialIntegral, ConstantProfile) {
  const auto rho = unit_profile({Rational(1)});
  const MeroValue expected = MeroValue::reciprocal({1}, 1) * MeroValue::constant(1, kHalfMinusI, 1);
  EXPECT_TRUE(same_function(radial_integral({1}, 0, rho), expected));
  const MeroValue shifted = MeroValue::reciprocal({1}, 0) * MeroValue::constant(1, kHalfMinusI, 1);
  EXPECT_TRUE(same_function(radial_integral({1}, -2, rho), shifted));
}

TEST(RadialIntegral, LinearProfile) {
  const auto rho = unit_profile({Rational(1), Rational(-1)});
  const MeroValue expected =
      (MeroValue::reciprocal({1}, 1) - MeroValue::reciprocal({1}, 2)) * MeroValue::constant(1, kHalfMinusI, 1);
  EXPECT_TRUE(same_function(radial_integral({1}, 0, rho), expected));
}

TEST(RadialIntegral, OddShiftRejected) {
  EXPECT_EQ(code_of([] { radial_integral({1}, 1, unit_profile({Rational(1)})); }), "OddShift");
}

// 2 pi int_0^1 r^(2 mu + c + 1) rho(r^2) dr by quadrature against the exact value
TEST(RadialIntegral, MatchesQuadrature) {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const RadialProfile rho = random_unit_profile(rng, 4);
    const int c = 2 * rng.uniform(-1, 2);
    const double mu = 1.5 + rng.uniform(0, 20) / 10.0;
    const auto q = integrate_adaptive(
        [&](double r) { return std::complex<double>(2 * std::numbers::pi * std::pow(r, 2 * mu + c + 1) * rho.evaluate(r * r)); },
        0.0, 1.0, 1e-14, 1e-12);
    const auto exact = at(radial_integral({1}, c, rho), {mu});
    EXPECT_LT(rel_diff(q.value, exact), 1e-9) << "trial " << trial;
  }
}

TEST(GammaExact, PrincipalValueOfX) {
  const Scenario s = data("pv_q1.json");
  const MeroValue g = gamma_exact(s, "x");
  const MeroValue expected = MeroValue::reciprocal({1}, 1) * MeroValue::constant(1, GaussRational(-1), 1);
  EXPECT_TRUE(same_function(g, expected)) << g.to_string();
  EXPECT_EQ(value_at_origin(g), (TokenScalar{GaussRational(-1), 1}));
}

TEST(GammaExact, CauchyNormalization) {
  const Scenario s = data("cauchy_p1.json");
  EXPECT_EQ(value_at_origin(gamma_exact(s, s.charts.front().name)), (TokenScalar{GaussRational(1), 1}));
}

TEST(GammaExact, BuiltinChartZHasResidueOnPoleForm) {
  const Scenario s = builtin_example3();
  const MeroValue g = gamma_exact(s, "z");
  const LinForm pole = normalize({1, 1, 0});
  EXPECT_EQ(g.multiplicity(AffineForm::from_linform(pole)), 1);
  const std::vector<GaussRational> pt{make_rational(5, 7), make_rational(-5, 7), make_rational(3, 11)};
  const TokenScalar rz = residue_on(pole, g, pt);
  EXPECT_FALSE(rz.coeff.is_zero());
  EXPECT_EQ(rz.twopii_power, 3);
  const TokenScalar rzeta = residue_on(pole, gamma_exact(s, "zeta"), pt);
  EXPECT_EQ(rz.coeff + rzeta.coeff, GaussRational(0));
}

TEST(GammaExact, BuiltinGlobalValueAndIntegrationByParts) {
  for (std::uint64_t seed : {0ull, 1ull, 2ull, 3ull}) {
    Example3Options o;
    if (seed) o.seed = seed;
    const auto pr = example3_profiles(o);
    const MeroValue global = gamma_global(builtin_example3(pr));
    const TokenScalar expected{GaussRational(example3_expected_coefficient(pr)), 3};
    EXPECT_EQ(value_at_origin(global), expected);
    EXPECT_TRUE(same_function(global, gamma_global(example3_base_scenario(pr))));
    EXPECT_EQ(value_at_origin(gamma_global(example3_ibp_scenario(pr))), expected);
  }
}

TEST(GammaExact, DeterministicAcrossCalls) {
  const Scenario s = builtin_example3({8, 42, false});
  EXPECT_EQ(gamma_exact(s, "z").to_string(), gamma_exact(s, "z").to_string());
}

TEST(FormSign, StandardOrder) {
  EXPECT_EQ(form_sign({}, 1, {0}), 1);   // dx1 dxbar1
  EXPECT_EQ(form_sign({0}, 1, {}), -1);  // dxbar1 dx1
  EXPECT_EQ(form_sign({}, 2, {0, 1}), -1);
}

TEST(ResidueOn, SimplePole) {
  const MeroValue v = MeroValue::reciprocal({0, 1, 1}, 0);
  const std::vector<GaussRational> pt{GaussRational(0), GaussRational(1), GaussRational(-1)};
  EXPECT_EQ(residue_on(normalize({0, 1, 1}), v, pt), (TokenScalar{GaussRational(1), 0}));
  EXPECT_EQ(code_of([&] { residue_on(normalize({0, 1, 1}), v * v, pt); }), "HigherOrderPole");
  EXPECT_EQ(code_of([&] { residue_on(normalize({1, 1, 0}), v, pt); }), "PointOffHyperplane");
}

TEST(ValueAtOrigin, PoleThroughOrigin) {
  EXPECT_EQ(code_of([] { value_at_origin(MeroValue::reciprocal({1, 1, 0}, 0)); }), "PoleAtOrigin");
}

TEST(ExtremePole, IndependentOfPower) {
  for (int k = 1; k <= 4; ++k) {
    for (int N = 1; N <= 5; ++N) {
      const Scenario s = pv_power(k, N, N * k, 0, {Rational(1), Rational(-1)});
      const auto pole = extreme_pole(gamma_exact(s, "x"));
      ASSERT_TRUE(pole.has_value());
      EXPECT_EQ(*pole, make_rational(-1, k)) << "k=" << k << " N=" << N;
    }
  }
}

TEST(Quadrature, AdaptiveKnownIntegrals) {
  const auto r = integrate_adaptive([](double x) { return std::complex<double>(std::exp(x), std::sin(x)); }, 0, 2,
                                    1e-14, 1e-13);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value.real(), std::exp(2.0) - 1, 1e-12);
  EXPECT_NEAR(r.value.imag(), 1 - std::cos(2.0), 1e-12);
  const auto p = integrate_piecewise([](double x) { return std::complex<double>(x < 0.3 ? 1.0 : 0.0); }, {0, 0.3, 1},
                                     1e-14, 1e-13);
  EXPECT_NEAR(p.value.real(), 0.3, 1e-13);
}

TEST(GammaQuadrature, PrincipalValueOfX) {
  const Scenario s = data("pv_q1.json");
  const auto q = gamma_quadrature(s, "x", {3.0});
  const std::complex<double> expected = -2.0 * std::numbers::pi * std::complex<double>(0, 1) / 4.0;
  EXPECT_LT(std::abs(q.value - expected), 1e-8 * std::abs(expected));
}

TEST(GammaQuadrature, BuiltinChartZ) {
  const Scenario s = builtin_example3();
  const std::vector<std::complex<double>> l{3.0, 4.0, 5.0};
  const auto q = gamma_quadrature(s, "z", l);
  EXPECT_LT(rel_diff(q.value, at(gamma_exact(s, "z"), l)), 1e-6);
}

TEST(GammaQuadrature, ZeroFormIsZero) {
  Scenario s = data("pv_q1.json");
  s.testforms["x"].terms.clear();
  EXPECT_EQ(gamma_quadrature(s, "x", {3.0}).value, std::complex<double>(0.0));
  EXPECT_TRUE(gamma_exact(s, "x").is_zero());
}

TEST(GammaQuadrature, Errors) {
  const Scenario s = data("pv_q1.json");
  EXPECT_EQ(code_of([&] { gamma_quadrature(s, "x", {1.0}); }), "OutsideConvergenceZone");
  EXPECT_EQ(code_of([&] { gamma_quadrature(s, "x", {3.0, 3.0}); }), "ArityMismatch");
  Rng rng(1);
  const Scenario big = random_scenario(rng, {4, 1, 1, 2});
  EXPECT_EQ(code_of([&] { gamma_quadrature(big, "c", {3.0, 3.0}); }), "DimensionTooLarge");
}

TEST(GammaQuadrature, AgreesWithExactOnRandomScenarios) {
  int nonzero = 0;
  for (const auto& s : rml::testing::small_quadrature_corpus(808, 8)) {
    const auto& c = s.charts.front().name;
    const MeroValue g = gamma_exact(s, c);
    nonzero += g.is_zero() ? 0 : 1;
    Rng rng(s.signature.num_lambdas());
    for (int k = 0; k < 2; ++k) {
      std::vector<std::complex<double>> l;
      for (int j = 0; j < s.signature.num_lambdas(); ++j) l.emplace_back(rng.uniform(20, 60) / 10.0, rng.uniform(-10, 10) / 10.0);
      const auto q = gamma_quadrature(s, c, l);
      EXPECT_TRUE(rml::testing::quadrature_agrees(q.value, at(g, l), 1e-6)) << q.value << " vs " << at(g, l);
    }
  }
  EXPECT_GE(nonzero, 4);
}
