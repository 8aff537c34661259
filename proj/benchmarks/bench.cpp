#include <benchmark/benchmark.h>

#include "ssmc/bipartite.hpp"
#include "ssmc/generators.hpp"
#include "ssmc/preprocess.hpp"
#include "ssmc/solver_degree2.hpp"

namespace {

using namespace ssmc;

Instance sized_instance(int n, double avg_degree) {
  GenParams p;
  p.seed = 7;
  p.num_doctors = n;
  p.num_hospitals = n;
  p.edge_prob = avg_degree / n;
  p.tie_prob = 0.3;
  p.closure_prob = 0.3;
  return gen_instance(p);
}

void bm_preprocess(benchmark::State& state) {
  Instance inst = sized_instance(static_cast<int>(state.range(0)), 10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(preprocess(inst));
  }
  state.SetComplexityN(inst.num_edges());
}
BENCHMARK(bm_preprocess)->Range(16, 1024)->Complexity();

void bm_max_matching(benchmark::State& state) {
  Instance inst = sized_instance(static_cast<int>(state.range(0)), 10.0);
  EdgeSet all = EdgeSet::all(inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_matching(inst, all));
  }
  state.SetComplexityN(inst.num_edges());
}
BENCHMARK(bm_max_matching)->Range(16, 1024)->Complexity();

void bm_solve_degree2(benchmark::State& state) {
  GenParams p;
  p.seed = 11;
  p.num_doctors = static_cast<int>(state.range(0));
  p.num_hospitals = p.num_doctors;
  p.enforce_degree2 = true;
  p.tie_prob = 0.3;
  p.closure_prob = 0.3;
  Instance inst = gen_instance(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_degree2_full(inst));
  }
  state.SetComplexityN(inst.num_edges());
}
BENCHMARK(bm_solve_degree2)->Range(16, 1024)->Complexity();

}  // namespace

BENCHMARK_MAIN();
