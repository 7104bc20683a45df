#include <benchmark/benchmark.h>

#include <random>

#include "lexbap/safe_sets.hpp"
#include "lexbap/sequential.hpp"

namespace {

using namespace lexbap;

WeightMatrix uniform_matrix(int m, int n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> weight(0.0, 100.0);
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(m) * n);
  for (int k = 0; k < m * n; ++k) data.push_back(weight(rng));
  return WeightMatrix(m, n, std::move(data));
}

void BM_BottleneckValue(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const WeightMatrix w = uniform_matrix(size, size, 91);
  const SubgraphSpec full = SubgraphSpec::full_graph(w);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bottleneck_value(full, w));
  }
}
BENCHMARK(BM_BottleneckValue)->Arg(50)->Arg(100)->Arg(200);

void BM_MaxMarginEdges(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const WeightMatrix w = uniform_matrix(size, size, 92);
  const SubgraphSpec full = SubgraphSpec::full_graph(w);
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_margin_edges_and_margin(full, w));
  }
}
BENCHMARK(BM_MaxMarginEdges)->Arg(50)->Arg(100);

void BM_SequentialAssign(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const WeightMatrix w = uniform_matrix(size, size, 93);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sequential_assign(w));
  }
  state.SetComplexityN(size);
}
BENCHMARK(BM_SequentialAssign)->Arg(25)->Arg(50)->Arg(100)->Complexity();

void BM_BuildSchedule(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  WeightMatrix w = uniform_matrix(size, size, 94);
  SequentialResult result = sequential_assign(w);
  while (!is_robust_lexicographic(result)) {
    static std::uint32_t seed = 95;
    w = uniform_matrix(size, size, seed++);
    result = sequential_assign(w);
  }
  double mu = std::numeric_limits<double>::infinity();
  for (const OrderRecord& order : result.orders) {
    if (!order.margin.is_infinite()) mu = std::min(mu, order.margin.value());
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_schedule(result, w, mu / 2.0, 10.0));
  }
}
BENCHMARK(BM_BuildSchedule)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
