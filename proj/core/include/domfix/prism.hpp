#pragma once

#include <vector>

#include "domfix/graph.hpp"
#include "domfix/permutation.hpp"

namespace domfix {

// Two copies of a source graph plus the matching v(copy 1) - pi(v)(copy 2).
// Copy-1 vertex v keeps label v; its copy-2 counterpart is v + n.
struct PrismGraph {
  Graph graph;
  std::vector<int> copy_of;   // 1 or 2 per prism vertex
  std::vector<int> project;   // source label per prism vertex
  Permutation source_permutation;
};

PrismGraph build_prism(const Graph& g, const Permutation& pi);

}  // namespace domfix
