#include "enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace gengraphs {

namespace {

constexpr int kMaxN = 11;

using Rows = std::array<uint16_t, kMaxN>;

Rows unpack(int n, uint64_t code) {
  Rows adj{};
  int b = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++b)
      if (code >> b & 1) {
        adj[u] |= uint16_t(1) << v;
        adj[v] |= uint16_t(1) << u;
      }
  return adj;
}

uint64_t mix(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Two rounds of neighborhood color refinement folded into one hash; cheap
// enough to run on every augmentation candidate.
uint64_t invariant(int n, const Rows& adj) {
  std::array<uint64_t, kMaxN> color{}, next{};
  int m = 0;
  for (int v = 0; v < n; ++v) {
    color[v] = std::popcount(adj[v]);
    m += std::popcount(adj[v]);
  }
  for (int round = 0; round < 2; ++round) {
    for (int v = 0; v < n; ++v) {
      std::array<uint64_t, kMaxN> nb{};
      int c = 0;
      uint16_t row = adj[v];
      while (row) {
        int u = std::countr_zero(row);
        row &= row - 1;
        nb[c++] = color[u];
      }
      std::sort(nb.begin(), nb.begin() + c);
      uint64_t h = color[v];
      for (int i = 0; i < c; ++i) h = mix(h, nb[i]);
      next[v] = h;
    }
    color = next;
  }
  std::sort(color.begin(), color.begin() + n);
  uint64_t h = (uint64_t(n) << 32) | unsigned(m);
  for (int v = 0; v < n; ++v) h = mix(h, color[v]);
  return h;
}

bool isomorphic(int n, const Rows& a, const Rows& b) {
  std::array<int, kMaxN> da, db;
  for (int v = 0; v < n; ++v) {
    da[v] = std::popcount(a[v]);
    db[v] = std::popcount(b[v]);
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.begin() + n);
    std::sort(sb.begin(), sb.begin() + n);
    for (int v = 0; v < n; ++v)
      if (sa[v] != sb[v]) return false;
  }

  std::array<int, kMaxN> map{};
  uint16_t used = 0;
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used >> w & 1) continue;
      if (da[v] != db[w]) continue;
      bool ok = true;
      for (int e = 0; e < v && ok; ++e)
        if (((a[v] >> e) & 1) != ((b[w] >> map[e]) & 1)) ok = false;
      if (!ok) continue;
      map[v] = w;
      used |= uint16_t(1) << w;
      if (self(self, v + 1)) return true;
      used &= ~(uint16_t(1) << w);
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

domfix::Graph decode(int n, uint64_t code) {
  domfix::Graph g(n);
  int b = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++b)
      if (code >> b & 1) g.add_edge(u, v);
  return g;
}

uint64_t encode(const domfix::Graph& g) {
  if (g.n() > kMaxN) throw std::invalid_argument("encode: graph too large");
  uint64_t code = 0;
  int b = 0;
  for (int v = 1; v < g.n(); ++v)
    for (int u = 0; u < v; ++u, ++b)
      if (g.has_edge(u, v)) code |= uint64_t(1) << b;
  return code;
}

bool code_connected(int n, uint64_t code) {
  if (n == 0) return true;
  Rows adj = unpack(n, code);
  uint16_t seen = 1, frontier = 1;
  while (frontier) {
    uint16_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= adj[v];
    }
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == (uint16_t(1) << n) - 1;
}

std::vector<std::vector<uint64_t>> enumerate_all(int max_n) {
  if (max_n < 1 || max_n > kMaxN)
    throw std::invalid_argument("enumerate_all: order out of range");
  std::vector<std::vector<uint64_t>> levels(max_n + 1);
  levels[1] = {0};

  for (int n = 2; n <= max_n; ++n) {
    const auto& parents = levels[n - 1];
    auto& out = levels[n];
    std::unordered_map<uint64_t, std::vector<uint32_t>> buckets;
    int shift = (n - 1) * (n - 2) / 2;

    for (uint64_t parent : parents) {
      Rows base = unpack(n - 1, parent);
      for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        Rows adj = base;
        adj[n - 1] = static_cast<uint16_t>(mask);
        uint32_t rest = mask;
        while (rest) {
          int u = std::countr_zero(rest);
          rest &= rest - 1;
          adj[u] |= uint16_t(1) << (n - 1);
        }

        uint64_t inv = invariant(n, adj);
        auto& bucket = buckets[inv];
        bool dup = false;
        for (uint32_t idx : bucket)
          if (isomorphic(n, adj, unpack(n, out[idx]))) {
            dup = true;
            break;
          }
        if (dup) continue;
        uint64_t code = parent | (uint64_t(mask) << shift);
        bucket.push_back(static_cast<uint32_t>(out.size()));
        out.push_back(code);
      }
    }
  }
  return levels;
}

}  // namespace gengraphs
