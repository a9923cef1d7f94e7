#include "domfix/graph.hpp"

#include <stdexcept>

namespace domfix {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  adj_.assign(n, BitSet(n));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Graph: self-loop");
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u].test(v);
}

const BitSet& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const { return neighbors(v).count(); }

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, adj_[v].count());
  return d;
}

BitSet Graph::closed_neighborhood(int v) const {
  BitSet s = neighbors(v);
  s.set(v);
  return s;
}

BitSet Graph::closed_neighborhood(const BitSet& s) const {
  if (s.universe() != n_)
    throw std::invalid_argument("closed_neighborhood: universe mismatch");
  BitSet r = s;
  s.for_each([&](int v) { r |= adj_[v]; });
  return r;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  e.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v))
      e.emplace_back(u, v);
  return e;
}

bool Graph::operator==(const Graph& o) const {
  return n_ == o.n_ && adj_ == o.adj_;
}

std::vector<Component> connected_components(const Graph& g) {
  int n = g.n();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int id = ncomp++;
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      g.neighbors(u).for_each([&](int v) {
        if (comp[v] == -1) {
          comp[v] = id;
          stack.push_back(v);
        }
      });
    }
  }

  std::vector<Component> out(ncomp);
  std::vector<std::vector<int>> members(ncomp);
  for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);

  std::vector<int> local(n, -1);
  for (int c = 0; c < ncomp; ++c) {
    out[c].to_parent = members[c];
    out[c].graph = Graph(static_cast<int>(members[c].size()));
    for (size_t i = 0; i < members[c].size(); ++i) local[members[c][i]] = static_cast<int>(i);
    for (int u : members[c])
      g.neighbors(u).for_each([&](int v) {
        if (u < v) out[c].graph.add_edge(local[u], local[v]);
      });
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  return connected_components(g).size() == 1;
}

}  // namespace domfix
