#include <benchmark/benchmark.h>

#include "epibohm/estimation.hpp"
#include "epibohm/geometry.hpp"
#include "epibohm/model.hpp"
#include "epibohm/solver.hpp"
#include "epibohm/types.hpp"

using namespace epibohm;

namespace {

void BM_JointDistribution(benchmark::State& state) {
  const SpinModel model(static_cast<int>(state.range(0)));
  double theta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(model::joint_distribution(Angle(theta), model));
    theta += 1e-3;
    if (theta >= kTwoPi) theta = 0.1;
  }
}
BENCHMARK(BM_JointDistribution)->Arg(1)->Arg(2);

void BM_FisherNumeric(benchmark::State& state) {
  const SpinModel model(1);
  const auto form = static_cast<model::FisherForm>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(model::fisher_information_numeric(Angle(1.0), model, form));
}
BENCHMARK(BM_FisherNumeric)
    ->Arg(static_cast<int>(model::FisherForm::Analytical))
    ->Arg(static_cast<int>(model::FisherForm::Metric))
    ->Arg(static_cast<int>(model::FisherForm::Epi));

void BM_GeneratingOde(benchmark::State& state) {
  const solver::GeneratingEquation eq{-4.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        solver::solve_generating_ode(eq, 0.0, 1.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GeneratingOde)->Arg(257)->Arg(4097);

void BM_Sampling(benchmark::State& state) {
  const SpinModel model(1);
  const auto m = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(estimation::sample(Angle(1.0), model, m, seed++));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m));
}
BENCHMARK(BM_Sampling)->Arg(1000)->Arg(100000);

void BM_InducedMetric(benchmark::State& state) {
  const geometry::CurveOnSimplex curve = geometry::epr_curve(SpinModel(2));
  double theta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        geometry::induced_metric(curve, Angle(theta), geometry::MetricForm::Amplitude));
    theta += 1e-3;
    if (theta >= kTwoPi) theta = 0.1;
  }
}
BENCHMARK(BM_InducedMetric);

void BM_MetricConstancyScan(benchmark::State& state) {
  const geometry::CurveOnSimplex curve = geometry::epr_curve(SpinModel(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        geometry::metric_constancy_scan(curve, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MetricConstancyScan)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
