#include <gtest/gtest.h>

#include "rml/error.hpp"
#include "rml/linform.hpp"
#include "rml/mero.hpp"
#include "support.hpp"

using namespace rml;

namespace {

LambdaPoly var(std::size_t k, std::size_t j) { return LambdaPoly::variable(k, j); }

MeroValue random_value(Rng& rng, std::size_t k) {
  LambdaPoly num(k);
  for (int t = 0; t < 3; ++t) {
    Exponents e(k, 0);
    for (auto& v : e) v = rng.uniform(0, 2);
    num.add_term(e, GaussRational(rng.rational(), rng.rational()));
  }
  MeroValue::Denominator den;
  for (int t = rng.uniform(0, 2); t > 0; --t) {
    std::vector<std::int64_t> c(k);
    for (auto& v : c) v = rng.uniform(-2, 2);
    if (std::all_of(c.begin(), c.end(), [](auto v) { return v == 0; })) c[0] = 1;
    den[AffineForm::make(c, rng.uniform(0, 3))] += 1;
  }
  return MeroValue(num, den, 0);
}

std::vector<GaussRational> random_point(Rng& rng, std::size_t k) {
  std::vector<GaussRational> p;
  for (std::size_t j = 0; j < k; ++j) p.emplace_back(rng.rational(17, 13), rng.rational(3, 7));
  return p;
}

}  // namespace

TEST(Normalize, DividesByGcd) {
  EXPECT_EQ(normalize({2, 4, 0}).coeffs(), (std::vector<std::int64_t>{1, 2, 0}));
  EXPECT_EQ(normalize({0, 3, 3}).coeffs(), (std::vector<std::int64_t>{0, 1, 1}));
}

TEST(Normalize, LeadingCoefficientPositive) {
  EXPECT_EQ(normalize({-1, 0, 1}).coeffs(), (std::vector<std::int64_t>{1, 0, -1}));
}

TEST(Normalize, ZeroVectorIsAnError) {
  try {
    normalize({0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "ZeroForm");
  }
}

TEST(Normalize, IdempotentAndScaleInvariant) {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(rng.uniform(1, 6)));
    for (auto& c : v) c = rng.uniform(-9, 9);
    if (std::all_of(v.begin(), v.end(), [](auto c) { return c == 0; })) continue;
    const LinForm f = normalize(v);
    EXPECT_EQ(normalize(f.coeffs()), f);
    int s = rng.uniform(-7, 7);
    if (s == 0) s = 3;
    std::vector<std::int64_t> w = v;
    for (auto& c : w) c *= s;
    EXPECT_EQ(normalize(w), f);
  }
}

TEST(AxisProportional, UnitAxes) {
  EXPECT_EQ(axis_proportional(normalize({0, 1, 0})), std::optional<std::size_t>(1));
  EXPECT_EQ(axis_proportional(normalize({1, 1, 0})), std::nullopt);
  EXPECT_EQ(axis_proportional(normalize({0, 0, 1})), std::optional<std::size_t>(2));
  EXPECT_EQ(axis_proportional(normalize({0, 0, -4})), std::optional<std::size_t>(2));
}

TEST(Reduce, ExactDivisionCancels) {
  const auto f = AffineForm::make({0, 1, 1}, 0);
  MeroValue v(var(3, 1) + var(3, 2), {{f, 1}}, 0);
  const MeroValue r = v.reduced();
  EXPECT_TRUE(r.denominator().empty());
  EXPECT_EQ(r.numerator(), LambdaPoly::constant(3, GaussRational(1)));
}

TEST(Reduce, NonDivisibleUnchanged) {
  const auto f = AffineForm::make({0, 1, 1}, 0);
  MeroValue v(var(3, 1), {{f, 1}}, 0);
  const MeroValue r = v.reduced();
  EXPECT_EQ(r.numerator(), v.numerator());
  EXPECT_EQ(r.denominator(), v.denominator());
}

TEST(Reduce, CancelsRepeatedFactor) {
  const auto f = AffineForm::make({1, 1, 0}, 0);
  const LambdaPoly s = var(3, 0) + var(3, 1);
  MeroValue v(var(3, 0) * s * s, {{f, 2}}, 0);
  const MeroValue r = v.reduced();
  EXPECT_TRUE(r.denominator().empty());
  EXPECT_EQ(r.numerator(), var(3, 0));
}

TEST(Reduce, IdempotentAndValuePreserving) {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 4));
    MeroValue v = random_value(rng, k);
    // multiply in a denominator factor so that reduce has something to do
    std::vector<std::int64_t> c(k);
    for (auto& x : c) x = rng.uniform(-2, 2);
    c[0] = 1;
    const auto f = AffineForm::make(c, rng.uniform(0, 2));
    v = v * MeroValue(affine_poly(f), {}, 0) * MeroValue(LambdaPoly::constant(k, GaussRational(1)), {{f, 1}}, 0);
    const MeroValue r = v.reduced();
    EXPECT_EQ(r.reduced().denominator(), r.denominator());
    const auto pt = random_point(rng, k);
    EXPECT_EQ(v.evaluate(pt), r.evaluate(pt));
  }
}

TEST(MeroArithmetic, CommutativeAndAssociative) {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 3));
    const MeroValue a = random_value(rng, k), b = random_value(rng, k), c = random_value(rng, k);
    EXPECT_TRUE(same_function(a + b, b + a));
    EXPECT_TRUE(same_function(a * b, b * a));
    EXPECT_TRUE(same_function((a + b) + c, a + (b + c)));
    EXPECT_TRUE(same_function((a * b) * c, a * (b * c)));
    EXPECT_TRUE(same_function(a * (b + c), a * b + a * c));
  }
}

TEST(MeroArithmetic, TokenPowersMustMatchForAddition) {
  const MeroValue a = MeroValue::constant(1, GaussRational(1), 1);
  const MeroValue b = MeroValue::constant(1, GaussRational(1), 2);
  EXPECT_THROW(a + b, Error);
  EXPECT_EQ((a * b).twopii_power(), 3);
}

TEST(MeroEvaluate, PoleAtPointIsReported) {
  const MeroValue v = MeroValue::reciprocal({1, 1}, 0);
  try {
    v.evaluate(std::vector<GaussRational>{GaussRational(1), GaussRational(-1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "PoleAtPoint");
  }
}
