#include <benchmark/benchmark.h>

#include "domfix/domination.hpp"
#include "domfix/fixer.hpp"
#include "domfix/graph.hpp"
#include "domfix/permutation.hpp"
#include "domfix/prism.hpp"

using namespace domfix;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

Graph hypercube(int d) {
  Graph g(1 << d);
  for (int v = 0; v < (1 << d); ++v)
    for (int b = 0; b < d; ++b)
      if (!(v & (1 << b))) g.add_edge(v, v | (1 << b));
  return g;
}

}  // namespace

static void BM_GammaExactCycle(benchmark::State& state) {
  Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_exact(g).gamma);
}
BENCHMARK(BM_GammaExactCycle)->Arg(12)->Arg(24)->Arg(48);

static void BM_GammaExactPetersen(benchmark::State& state) {
  Graph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(gamma_exact(g).gamma);
}
BENCHMARK(BM_GammaExactPetersen);

static void BM_GammaExactHypercube(benchmark::State& state) {
  Graph g = hypercube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_exact(g).gamma);
}
BENCHMARK(BM_GammaExactHypercube)->Arg(3)->Arg(4)->Arg(5);

static void BM_GammaBruteforceCycle(benchmark::State& state) {
  Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_bruteforce(g).gamma);
}
BENCHMARK(BM_GammaBruteforceCycle)->Arg(8)->Arg(12)->Arg(16);

static void BM_SymmetricSetsCycle(benchmark::State& state) {
  Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(find_symmetric_gamma_sets(g).size());
}
BENCHMARK(BM_SymmetricSetsCycle)->Arg(8)->Arg(12)->Arg(16);

static void BM_PrismGamma(benchmark::State& state) {
  Graph g = petersen();
  Permutation id = Permutation::identity(g.n());
  for (auto _ : state) {
    Graph p = build_prism(g, id).graph;
    benchmark::DoNotOptimize(gamma_exact(p).gamma);
  }
}
BENCHMARK(BM_PrismGamma);
