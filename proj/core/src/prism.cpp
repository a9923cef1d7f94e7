#include "domfix/prism.hpp"

#include <stdexcept>

namespace domfix {

PrismGraph build_prism(const Graph& g, const Permutation& pi) {
  int n = g.n();
  if (pi.size() != n) throw std::invalid_argument("build_prism: permutation size mismatch");

  PrismGraph p;
  p.graph = Graph(2 * n);
  p.copy_of.resize(2 * n);
  p.project.resize(2 * n);
  p.source_permutation = pi;

  for (int v = 0; v < n; ++v) {
    p.copy_of[v] = 1;
    p.project[v] = v;
    p.copy_of[v + n] = 2;
    p.project[v + n] = v;
  }
  for (auto [u, v] : g.edges()) {
    p.graph.add_edge(u, v);
    p.graph.add_edge(u + n, v + n);
  }
  for (int v = 0; v < n; ++v) p.graph.add_edge(v, pi(v) + n);
  return p;
}

}  // namespace domfix
