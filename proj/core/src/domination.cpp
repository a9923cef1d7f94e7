#include "domfix/domination.hpp"

#include <stdexcept>
#include <vector>

namespace domfix {

namespace {

std::vector<BitSet> closed_rows(const Graph& g) {
  std::vector<BitSet> rows;
  rows.reserve(g.n());
  for (int v = 0; v < g.n(); ++v) rows.push_back(g.closed_neighborhood(v));
  return rows;
}

}  // namespace

bool is_dominating(const Graph& g, const BitSet& d) {
  return g.closed_neighborhood(d) == BitSet::full(g.n());
}

bool dominates_set(const Graph& g, const BitSet& a, const BitSet& b) {
  return g.closed_neighborhood(a).contains(b);
}

DominationCertificate gamma_bruteforce(const Graph& g, int cap) {
  int n = g.n();
  if (n > cap)
    throw std::invalid_argument("gamma_bruteforce: vertex count exceeds cap");
  auto closed = closed_rows(g);
  BitSet all = BitSet::full(n);

  for (int s = 0; s <= n; ++s) {
    std::vector<int> c(s);
    for (int i = 0; i < s; ++i) c[i] = i;
    while (true) {
      BitSet cov(n);
      BitSet set(n);
      for (int v : c) {
        cov |= closed[v];
        set.set(v);
      }
      if (cov == all) return {s, set};
      // Advance to the next s-combination in lexicographic order.
      int i = s - 1;
      while (i >= 0 && c[i] == n - s + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
    }
  }
  throw std::logic_error("gamma_bruteforce: no dominating set found");
}

namespace {

struct BranchAndBound {
  const std::vector<BitSet>& closed;
  BitSet all;
  int n;
  int cover_cap;  // maxdeg + 1
  int best;
  BitSet best_set;

  void seed_greedy() {
    BitSet covered(n), chosen(n);
    while (!(covered == all)) {
      int pick = -1, gain = -1;
      for (int v = 0; v < n; ++v) {
        int d = (closed[v] - covered).count();
        if (d > gain) {
          gain = d;
          pick = v;
        }
      }
      chosen.set(pick);
      covered |= closed[pick];
    }
    best = chosen.count();
    best_set = chosen;
  }

  void dfs(const BitSet& chosen, const BitSet& covered, BitSet banned, int k) {
    if (covered == all) {
      if (k < best) {
        best = k;
        best_set = chosen;
      }
      return;
    }
    BitSet uncovered = all - covered;
    if (k + (uncovered.count() + cover_cap - 1) / cover_cap >= best) return;

    int pick = -1, fewest = n + 1;
    uncovered.for_each([&](int v) {
      int c = (closed[v] - banned).count();
      if (c < fewest) {
        fewest = c;
        pick = v;
      }
    });
    if (fewest == 0) return;

    BitSet cands = closed[pick] - banned;
    for (int u = cands.first(); u != -1; u = cands.next(u)) {
      BitSet next_chosen = chosen;
      next_chosen.set(u);
      dfs(next_chosen, covered | closed[u], banned, k + 1);
      banned.set(u);
    }
  }
};

}  // namespace

DominationCertificate gamma_exact(const Graph& g) {
  int n = g.n();
  auto closed = closed_rows(g);
  BranchAndBound bb{closed, BitSet::full(n), n, g.max_degree() + 1, 0, BitSet(n)};
  if (n == 0) return {0, BitSet(0)};
  bb.seed_greedy();
  bb.dfs(BitSet(n), BitSet(n), BitSet(n), 0);
  return {bb.best, bb.best_set};
}

void enumerate_gamma_sets(const Graph& g, int size,
                          const std::function<bool(const BitSet&)>& visit) {
  int n = g.n();
  if (size < 0) throw std::invalid_argument("enumerate_gamma_sets: negative size");
  auto closed = closed_rows(g);
  BitSet all = BitSet::full(n);
  int cover_cap = g.max_degree() + 1;

  // dead[c] = vertices whose entire closed neighborhood lies below c, hence
  // uncoverable once all remaining picks are >= c.
  std::vector<BitSet> dead(n + 1, BitSet(n));
  for (int v = 0; v < n; ++v) {
    int top = v;
    g.neighbors(v).for_each([&](int u) { top = std::max(top, u); });
    for (int c = top + 1; c <= n; ++c) dead[c].set(v);
  }

  BitSet chosen(n);
  // Returns false once visit asks to stop.
  auto rec = [&](auto&& self, int start, const BitSet& covered, int count) -> bool {
    if (count == size) return covered == all ? visit(chosen) : true;
    int remaining = size - count;
    BitSet uncovered = all - covered;
    if (uncovered.count() > remaining * cover_cap) return true;
    if (uncovered.intersects(dead[start])) return true;
    for (int v = start; v <= n - remaining; ++v) {
      chosen.set(v);
      bool go = self(self, v + 1, covered | closed[v], count + 1);
      chosen.reset(v);
      if (!go) return false;
    }
    return true;
  };
  rec(rec, 0, BitSet(n), 0);
}

bool is_two_packing(const Graph& g, const BitSet& s) {
  if (s.universe() != g.n())
    throw std::invalid_argument("is_two_packing: universe mismatch");
  auto members = s.to_vector();
  for (size_t i = 0; i < members.size(); ++i) {
    BitSet ni = g.closed_neighborhood(members[i]);
    for (size_t j = i + 1; j < members.size(); ++j)
      if (ni.intersects(g.closed_neighborhood(members[j]))) return false;
  }
  return true;
}

bool is_maximal_two_packing(const Graph& g, const BitSet& s) {
  if (!is_two_packing(g, s))
    throw std::invalid_argument("is_maximal_two_packing: input is not a 2-packing");
  BitSet hood = g.closed_neighborhood(s);
  for (int v = 0; v < g.n(); ++v) {
    if (s.test(v)) continue;
    if (!g.closed_neighborhood(v).intersects(hood)) return false;
  }
  return true;
}

}  // namespace domfix
