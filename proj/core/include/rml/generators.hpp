#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "rml/chart.hpp"
#include "rml/exterior.hpp"

namespace rml {

/// Seeded random source for corpora and property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }
  Rational rational(int max_num = 5, int max_den = 4);
  Rational nonzero_rational(int max_num = 5, int max_den = 4);
  std::vector<int> subset(int n, int size);  // sorted, 0-based
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

struct ChartShape {
  int n = 3;
  int p = 2;
  int q = 1;
  int max_exp = 3;
};

/// Random chart with nonzero alpha rows and the given shape.
ChartSpec random_chart(Rng& rng, const ChartShape& shape, const std::string& name = "c");

/// Polynomial profile on [0, 1] of degree <= max_degree.
RadialProfile random_unit_profile(Rng& rng, int max_degree = 3);

/// Random test form whose terms pass the angular selection rule for the
/// chart (with probability `noise` a term gets a random a instead) and which
/// is smooth along K: b_i >= 1 whenever i in K lacks a dxbar slot.
SeparableTestForm random_k_smooth_form(Rng& rng, const ChartSpec& chart, int N, int terms, double noise = 0.2);

/// Single-chart scenario around a random chart and form.
Scenario random_scenario(Rng& rng, const ChartShape& shape, int N = 1, int terms = 3);

/// Diagonal chart f_j = x_j^{k_j} (residue rows first) with a selected form.
Scenario random_diagonal_scenario(Rng& rng, int p, int q, int max_k = 3, int terms = 2);

/// Sparse random polynomial form of the given degree.
PolyForm random_polyform(Rng& rng, int n, int degree, int max_terms = 4, int max_exp = 2);

/// Psi = sum_t g_t d(x^alpha(t)) ^ eta_t + x^K theta: data for which the
/// division construction must satisfy property ii.
PolyForm complete_intersection_psi(Rng& rng, int n, int degree, const std::vector<std::vector<int>>& alphas,
                                   const std::set<int>& K);

}  // namespace rml
