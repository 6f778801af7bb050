// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "legendre/conjugate.hpp"
#include "legendre/contact.hpp"
#include "legendre/curve.hpp"
#include "legendre/duality.hpp"
#include "legendre/expr.hpp"

using namespace legendre;

namespace {

void BM_EvalSeries(benchmark::State& state) {
  const Expr e = parse("exp(sin(x))*x^3/(1+x^2)");
  const int order = static_cast<int>(state.range(0));
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_series(e, x, order));
    x += 1e-9;
  }
}
BENCHMARK(BM_EvalSeries)->Arg(0)->Arg(3)->Arg(Series::kMaxOrder);

void BM_ConjugateSup(benchmark::State& state) {
  const Expr f = parse("exp(x)+x^2");
  const std::vector<double> ps = linspace(-5, 5, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_sup(f, {-3, 3}, ps));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ConjugateSup)->Arg(64)->Arg(1024);

void BM_SampleDual(benchmark::State& state) {
  const ParamCurve c = ParamCurve::graph(parse("sin(x)"), 0, 7 * std::numbers::pi);
  const ParamCurve dual = dual_curve(c);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_curve(dual, n));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SampleDual)->Arg(256)->Arg(2048);

void BM_FindInflections(benchmark::State& state) {
  const ParamCurve c = ParamCurve::graph(parse("sin(x)"), 0, 7 * std::numbers::pi);
  for (auto _ : state) benchmark::DoNotOptimize(find_inflections(c));
}
BENCHMARK(BM_FindInflections);

void BM_PedalCurve(benchmark::State& state) {
  const ParamCurve ped = pedal_curve(parse_curve_spec("ellipse(2,1)"), {0.3, 0.2});
  for (auto _ : state) benchmark::DoNotOptimize(sample_curve(ped, 1024));
}
BENCHMARK(BM_PedalCurve);

}  // namespace

BENCHMARK_MAIN();
