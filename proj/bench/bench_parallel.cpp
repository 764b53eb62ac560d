// Serial reference path against the OpenMP path for the data-parallel kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "motivic/milnor.hpp"
#include "motivic/polytope.hpp"

using namespace motivic;

namespace {

std::vector<PolyFormula> sample_formulas(std::size_t count) {
  std::mt19937_64 rng(99);
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  std::vector<PolyFormula> out;
  for (std::size_t i = 0; i < count; ++i) {
    PolyFormula f{3, {}};
    for (int d = 0; d < 2; ++d) {
      Conjunction c;
      for (int k = 0; k < 3; ++k) {
        AffineForm form{{BigInt(pick(-2, 2)), BigInt(pick(-2, 2)), BigInt(pick(-2, 2))}, Rational(pick(-3, 3))};
        c.push_back({form, pick(0, 1) ? Relation::gt : Relation::ge});
      }
      f.disjuncts.push_back(std::move(c));
    }
    out.push_back(std::move(f));
  }
  return out;
}

void BM_EuBatch(benchmark::State& state) {
  const auto fs = sample_formulas(64);
  const auto exec = state.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : state) benchmark::DoNotOptimize(eu_batch(fs, exec));
  state.SetLabel(exec == Exec::parallel ? "parallel" : "serial");
}

void BM_EuCBatch(benchmark::State& state) {
  const auto fs = sample_formulas(32);
  const auto exec = state.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : state) benchmark::DoNotOptimize(eu_c_batch(fs, exec));
  state.SetLabel(exec == Exec::parallel ? "parallel" : "serial");
}

void BM_DualitySweep(benchmark::State& state) {
  const auto exec = state.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : state) benchmark::DoNotOptimize(sweep(5, 6, true, true, exec));
  state.SetLabel(exec == Exec::parallel ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_EuBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EuCBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DualitySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
