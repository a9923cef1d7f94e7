#pragma once

#include <utility>
#include <vector>

#include "domfix/bitset.hpp"

namespace domfix {

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  int m() const { return m_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  const BitSet& neighbors(int v) const;
  int degree(int v) const;
  int max_degree() const;

  // N[v] = N(v) plus v itself.
  BitSet closed_neighborhood(int v) const;
  // N[S] = union of N[v] over v in S.
  BitSet closed_neighborhood(const BitSet& s) const;

  // Edge list with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& o) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<BitSet> adj_;
};

// One connected piece of a graph, with the map back to the host's labels.
struct Component {
  Graph graph;
  std::vector<int> to_parent;  // to_parent[i] = original label of vertex i
};

// Components ordered by their smallest original vertex; labels inside each
// component keep the original relative order.
std::vector<Component> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace domfix
