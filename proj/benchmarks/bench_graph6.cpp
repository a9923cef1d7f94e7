#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "domfix/graph.hpp"
#include "domfix/graph6.hpp"
#include "domfix/rng.hpp"

using namespace domfix;

namespace {

// seeded G(n, ~1/4) samples
std::vector<std::string> sample_lines(int n, int count) {
  SplitMix64 rng(12345);
  std::vector<std::string> lines;
  for (int i = 0; i < count; ++i) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u)
        if (rng.next() % 4 == 0) g.add_edge(u, v);
    lines.push_back(write_graph6(g));
  }
  return lines;
}

}  // namespace

static void BM_ParseGraph6(benchmark::State& state) {
  auto lines = sample_lines(static_cast<int>(state.range(0)), 256);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_graph6(lines[i]).m());
    i = (i + 1) % lines.size();
  }
}
BENCHMARK(BM_ParseGraph6)->Arg(16)->Arg(64)->Arg(256);

static void BM_WriteGraph6(benchmark::State& state) {
  auto lines = sample_lines(static_cast<int>(state.range(0)), 64);
  std::vector<Graph> graphs;
  for (const auto& l : lines) graphs.push_back(parse_graph6(l));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(write_graph6(graphs[i]).size());
    i = (i + 1) % graphs.size();
  }
}
BENCHMARK(BM_WriteGraph6)->Arg(16)->Arg(64)->Arg(256);

static void BM_RoundTrip(benchmark::State& state) {
  auto lines = sample_lines(static_cast<int>(state.range(0)), 64);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(write_graph6(parse_graph6(lines[i])) == lines[i]);
    i = (i + 1) % lines.size();
  }
}
BENCHMARK(BM_RoundTrip)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
