#pragma once

#include "domfix/graph.hpp"

// Named graphs shared by the unit and acceptance suites.
namespace fixtures {

using domfix::Graph;

inline Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) g.add_edge(u, v);
  return g;
}

inline Graph edgeless(int n) { return Graph(n); }

// center 0, leaves 1..n
inline Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

inline Graph hypercube(int d) {
  Graph g(1 << d);
  for (int v = 0; v < (1 << d); ++v)
    for (int b = 0; b < d; ++b)
      if (!(v & (1 << b))) g.add_edge(v, v | (1 << b));
  return g;
}

inline Graph k3_plus_k2() {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  return g;
}

// gamma = 4, prism fixer, exactly one symmetric gamma-set [{0},{7,8,9}]
// (odd parts, so no even set exists).
inline Graph spider10() {
  Graph g(10);
  for (int i = 1; i <= 6; ++i) g.add_edge(0, i);
  g.add_edge(7, 1);
  g.add_edge(7, 2);
  g.add_edge(8, 3);
  g.add_edge(8, 4);
  g.add_edge(9, 5);
  g.add_edge(9, 6);
  return g;
}

// gamma = 4, prism fixer, single even symmetric gamma-set [{0,1},{2,3}]
// which is trivially a pivot.
inline Graph pivot10() {
  Graph g(10);
  for (int v : {4, 5, 6, 7}) g.add_edge(0, v);
  for (int v : {8, 9}) g.add_edge(1, v);
  for (int v : {4, 5, 8, 9}) g.add_edge(2, v);
  for (int v : {6, 7}) g.add_edge(3, v);
  return g;
}

// same shape one size up; both parts of the pivot have degree sums n - 4
inline Graph pivot12() {
  Graph g(12);
  for (int v : {4, 5, 6, 7}) g.add_edge(0, v);
  for (int v : {8, 9, 10, 11}) g.add_edge(1, v);
  for (int v : {4, 5, 8, 9}) g.add_edge(2, v);
  for (int v : {6, 7, 10, 11}) g.add_edge(3, v);
  return g;
}

// gamma = 4, prism fixer whose even symmetric gamma-sets form a disjoint
// family: [{0,1},{2,3}] and [{4,5},{6,7}].
inline Graph disjoint_family16() {
  Graph g(16);
  const int adj[16][6] = {
      {4, 6, 8, 9, 10, 11},   {5, 7, 12, 13, 14, 15}, {4, 7, 8, 9, 12, 13},
      {5, 6, 10, 11, 14, 15}, {0, 2, 10, 12, 14, 15}, {1, 3, 8, 9, 11, 13},
      {0, 3, 9, 10, 12, 15},  {1, 2, 8, 11, 13, 14},  {0, 2, 5, 7, -1, -1},
      {0, 2, 5, 6, -1, -1},   {0, 3, 4, 6, -1, -1},   {0, 3, 5, 7, -1, -1},
      {1, 2, 4, 6, -1, -1},   {1, 2, 5, 7, -1, -1},   {1, 3, 4, 7, -1, -1},
      {1, 3, 4, 6, -1, -1}};
  for (int u = 0; u < 16; ++u)
    for (int k = 0; k < 6; ++k)
      if (adj[u][k] >= 0 && u < adj[u][k]) g.add_edge(u, adj[u][k]);
  return g;
}

// Three rows {0..3}, {4..7}, {8..11} linked by unique next-row neighbors:
// a 9-cycle 9-0-4-8-3-7-11-1-5-9 plus the triangle 10-2-6. The closing map
// works out to a = [1,3,2,0].
inline Graph three_row_chain12() {
  Graph g(12);
  const int es[12][2] = {{9, 0},  {0, 4}, {4, 8}, {8, 3},  {3, 7}, {7, 11},
                         {11, 1}, {1, 5}, {5, 9}, {10, 2}, {2, 6}, {10, 6}};
  for (auto& e : es) g.add_edge(e[0], e[1]);
  return g;
}

}  // namespace fixtures
