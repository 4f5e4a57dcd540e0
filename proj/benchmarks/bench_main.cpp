#include <benchmark/benchmark.h>

#include "rml/builtin.hpp"
#include "rml/exterior.hpp"
#include "rml/generators.hpp"
#include "rml/leibniz.hpp"
#include "rml/mellin.hpp"
#include "rml/pole_calculus.hpp"
#include "rml/quadrature.hpp"

namespace {

void BM_GammaExactBuiltin(benchmark::State& state) {
  rml::Example3Options o;
  o.profile_degree = static_cast<int>(state.range(0));
  if (o.profile_degree > 2) o.seed = 7;
  const rml::Scenario s = rml::builtin_example3(o);
  for (auto _ : state) benchmark::DoNotOptimize(rml::gamma_global(s));
}
BENCHMARK(BM_GammaExactBuiltin)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ChartCertificate(benchmark::State& state) {
  rml::Rng rng(1);
  const rml::ChartSpec c = rml::random_chart(rng, {4, 4, 2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(rml::chart_certificate(c));
}
BENCHMARK(BM_ChartCertificate);

void BM_Deduce(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rml::deduce(p, p));
}
BENCHMARK(BM_Deduce)->DenseRange(2, 6, 1);

void BM_BuildOmega(benchmark::State& state) {
  rml::Rng rng(2);
  const int n = 5;
  const rml::PolyForm psi = rml::random_polyform(rng, n, 2, 8, 3);
  std::set<int> K;
  for (int j = 0; j < state.range(0); ++j) K.insert(j);
  for (auto _ : state) benchmark::DoNotOptimize(rml::build_omega(psi, K));
}
BENCHMARK(BM_BuildOmega)->DenseRange(1, 5, 1);

void BM_GammaQuadratureChartZ(benchmark::State& state) {
  const rml::Scenario s = rml::builtin_example3();
  const std::vector<std::complex<double>> l{3.0, 4.0, 5.0};
  for (auto _ : state) benchmark::DoNotOptimize(rml::gamma_quadrature(s, "z", l));
}
BENCHMARK(BM_GammaQuadratureChartZ)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
