#include "domfix/adversary.hpp"

#include <algorithm>
#include <numeric>

#include "domfix/domination.hpp"
#include "domfix/prism.hpp"
#include "domfix/rng.hpp"

namespace domfix {

const char* route_name(WitnessRoute r) {
  switch (r) {
    case WitnessRoute::THEOREM4: return "THEOREM4";
    case WitnessRoute::THEOREM5: return "THEOREM5";
    case WitnessRoute::THEOREM6: return "THEOREM6";
    case WitnessRoute::IDENTITY: return "IDENTITY";
    case WitnessRoute::OBSERVATION2: return "OBSERVATION2";
    case WitnessRoute::FALLBACK_SEARCH: return "FALLBACK_SEARCH";
    case WitnessRoute::EDGELESS: return "EDGELESS";
  }
  return "?";
}

int select_private_neighbor(const Graph& g, const std::vector<int>& d1, int x1) {
  if (d1.empty())
    throw std::invalid_argument("select_private_neighbor: empty vertex list");
  if (std::find(d1.begin(), d1.end(), x1) == d1.end())
    throw std::invalid_argument("select_private_neighbor: x1 not in d1");

  BitSet cand = g.neighbors(x1);
  for (int x : d1)
    if (x != x1) cand -= g.neighbors(x);
  int u1 = cand.first();
  if (u1 == -1)
    throw std::invalid_argument(
        "select_private_neighbor: no private neighbor exists; d1 is not a "
        "2-packing with deg(x1) >= 1");
  return u1;
}

Permutation build_alpha_private_cycle(const Graph& g, const std::vector<int>& d1) {
  int u1 = select_private_neighbor(g, d1, d1.front());
  std::vector<int> map(g.n());
  std::iota(map.begin(), map.end(), 0);
  for (size_t i = 0; i + 1 < d1.size(); ++i) map[d1[i]] = d1[i + 1];
  map[d1.back()] = u1;
  map[u1] = d1.front();
  return Permutation(std::move(map));
}

ChainIndexing build_chain_indexing(const Graph& g,
                                   const std::vector<BitSet>& rows) {
  int m = static_cast<int>(rows.size());
  if (m < 2)
    throw std::invalid_argument("build_chain_indexing: need at least 2 rows");
  int k = rows[0].count();
  if (k < 1)
    throw std::invalid_argument("build_chain_indexing: empty row");
  BitSet seen(g.n());
  for (const auto& r : rows) {
    if (r.universe() != g.n())
      throw std::invalid_argument("build_chain_indexing: universe mismatch");
    if (r.count() != k)
      throw std::invalid_argument("build_chain_indexing: rows of unequal size");
    if (seen.intersects(r))
      throw std::invalid_argument("build_chain_indexing: rows not disjoint");
    seen |= r;
  }

  // The unique neighbor of v inside row r; anything else contradicts the
  // Hartnell-Rall structure of the family.
  auto link = [&](int v, const BitSet& r) {
    BitSet nb = g.neighbors(v) & r;
    if (nb.count() != 1)
      throw std::invalid_argument(
          "build_chain_indexing: vertex has zero or multiple neighbors in the "
          "next row");
    return nb.first();
  };

  ChainIndexing ci;
  ci.x.assign(m, std::vector<int>(k));
  ci.x[0] = rows[0].to_vector();
  for (int i = 0; i + 1 < m; ++i) {
    BitSet used(g.n());
    for (int j = 0; j < k; ++j) {
      int t = link(ci.x[i][j], rows[i + 1]);
      if (used.test(t))
        throw std::invalid_argument(
            "build_chain_indexing: two vertices share a next-row neighbor");
      used.set(t);
      ci.x[i + 1][j] = t;
    }
  }

  std::vector<int> pos(g.n(), -1);
  for (int j = 0; j < k; ++j) pos[ci.x[m - 1][j]] = j;
  ci.a.resize(k);
  std::vector<char> hit(k, 0);
  for (int j = 0; j < k; ++j) {
    int t = link(ci.x[0][j], rows[m - 1]);
    ci.a[j] = pos[t];
    if (hit[ci.a[j]])
      throw std::invalid_argument(
          "build_chain_indexing: closing map is not a bijection");
    hit[ci.a[j]] = 1;
  }
  return ci;
}

ChainIndexing build_chain_indexing(const Graph& g,
                                   const std::vector<SymmetricGammaSet>& family) {
  BitSet seen(g.n());
  std::vector<BitSet> rows;
  rows.reserve(family.size());
  for (const auto& s : family) {
    if (!s.even())
      throw std::invalid_argument("build_chain_indexing: family member not even");
    BitSet whole = s.whole();
    if (seen.intersects(whole))
      throw std::invalid_argument("build_chain_indexing: family not disjoint");
    seen |= whole;
    rows.push_back(s.d1);
  }
  return build_chain_indexing(g, rows);
}

Permutation build_alpha_chain(const ChainIndexing& ci, int n) {
  int m = static_cast<int>(ci.x.size());
  if (m < 2) throw std::invalid_argument("build_alpha_chain: malformed indexing");
  int k = static_cast<int>(ci.x[0].size());
  if (k < 1 || static_cast<int>(ci.a.size()) != k)
    throw std::invalid_argument("build_alpha_chain: malformed indexing");

  std::vector<int> map(n);
  std::iota(map.begin(), map.end(), 0);
  std::vector<char> seen(n, 0);
  for (const auto& row : ci.x) {
    if (static_cast<int>(row.size()) != k)
      throw std::invalid_argument("build_alpha_chain: malformed indexing");
    for (int v : row) {
      if (v < 0 || v >= n || seen[v])
        throw std::invalid_argument("build_alpha_chain: malformed indexing");
      seen[v] = 1;
    }
  }

  for (int i = 0; i + 1 < m; ++i)
    for (int j = 0; j < k; ++j) map[ci.x[i][j]] = ci.x[i + 1][j];
  for (int j = 0; j < k; ++j) {
    int aj = ci.a[j];
    if (aj < 0 || aj >= k)
      throw std::invalid_argument("build_alpha_chain: malformed indexing");
    map[ci.x[m - 1][aj]] = ci.x[0][(j + 1) % k];
  }
  return Permutation(std::move(map));
}

Permutation compose_component_witness(const Graph& g,
                                      const std::vector<Component>& components,
                                      int j, const Permutation& pi_j) {
  if (j < 0 || j >= static_cast<int>(components.size()))
    throw std::out_of_range("compose_component_witness: component index");
  const Component& c = components[j];
  if (pi_j.size() != c.graph.n())
    throw std::invalid_argument("compose_component_witness: permutation size mismatch");

  std::vector<int> map(g.n());
  std::iota(map.begin(), map.end(), 0);
  for (int v = 0; v < c.graph.n(); ++v) map[c.to_parent[v]] = c.to_parent[pi_j(v)];
  return Permutation(std::move(map));
}

namespace {

int prism_gamma(const Graph& g, const Permutation& pi) {
  return gamma_exact(build_prism(g, pi).graph).gamma;
}

}  // namespace

std::optional<Permutation> fallback_witness_search(const Graph& g,
                                                   const AdversaryOptions& opts) {
  if (g.m() == 0)
    throw std::invalid_argument("fallback_witness_search: edgeless input");
  int n = g.n();
  int gamma = gamma_exact(g).gamma;

  Permutation id = Permutation::identity(n);
  if (prism_gamma(g, id) > gamma) return id;

  if (n <= 7) {
    std::vector<int> map(n);
    std::iota(map.begin(), map.end(), 0);
    while (std::next_permutation(map.begin(), map.end())) {
      Permutation pi(map);
      if (prism_gamma(g, pi) > gamma) return pi;
    }
    return std::nullopt;
  }

  SplitMix64 rng(opts.seed);
  for (long long t = 0; t < opts.fallback_budget; ++t) {
    Permutation pi = random_permutation(n, rng);
    if (prism_gamma(g, pi) > gamma) return pi;
  }
  return std::nullopt;
}

WitnessReport find_witness(const Graph& g, const AdversaryOptions& opts) {
  int n = g.n();
  WitnessReport rep;
  rep.gamma_g = gamma_exact(g).gamma;

  if (g.m() == 0) {
    rep.route = WitnessRoute::EDGELESS;
    rep.alpha = Permutation::identity(n);
    rep.gamma_prism = prism_gamma(g, rep.alpha);
    rep.gamma_prism_identity = rep.gamma_prism;
    rep.found = true;
    rep.violation = rep.gamma_prism != rep.gamma_g;
    return rep;
  }

  if (!is_connected(g)) {
    rep.route = WitnessRoute::OBSERVATION2;
    rep.gamma_prism_identity =
        prism_gamma(g, Permutation::identity(n));
    auto comps = connected_components(g);
    for (size_t j = 0; j < comps.size(); ++j) {
      if (comps[j].graph.m() == 0) continue;
      WitnessReport sub = find_witness(comps[j].graph, opts);
      if (!sub.found || sub.gamma_prism <= sub.gamma_g) continue;
      rep.alpha = compose_component_witness(g, comps, static_cast<int>(j), sub.alpha);
      rep.gamma_prism = prism_gamma(g, rep.alpha);
      rep.found = true;
      rep.violation = rep.gamma_prism <= rep.gamma_g;
      rep.detail.component = static_cast<int>(j);
      rep.detail.component_route = sub.route;
      return rep;
    }
    return rep;  // no component produced a witness
  }

  auto sets = find_symmetric_gamma_sets(g, opts.fixer);
  rep.gamma_prism_identity = prism_gamma(g, Permutation::identity(n));
  bool fixer = rep.gamma_prism_identity == rep.gamma_g;
  if (fixer != !sets.empty())
    throw std::logic_error(
        "find_witness: symmetric gamma-set search disagrees with direct prism "
        "computation");

  if (!fixer) {
    rep.route = WitnessRoute::IDENTITY;
    rep.alpha = Permutation::identity(n);
    rep.gamma_prism = rep.gamma_prism_identity;
    rep.found = true;
    rep.violation = rep.gamma_prism <= rep.gamma_g;
    return rep;
  }

  if (rep.gamma_g >= 4) {
    EvenStructure es = classify_even_structure(sets);
    rep.detail.structure = es.kind;
    switch (es.kind) {
      case EvenStructureKind::NO_EVEN: {
        rep.route = WitnessRoute::THEOREM5;
        SymmetricGammaSet s = sets.front();
        if (s.d1.count() < s.d2.count()) std::swap(s.d1, s.d2);
        rep.alpha = build_alpha_private_cycle(g, s.d1.to_vector());
        rep.detail.sym = s;
        rep.detail.u1 = rep.alpha(s.d1.to_vector().back());
        break;
      }
      case EvenStructureKind::PIVOT: {
        rep.route = WitnessRoute::THEOREM4;
        const SymmetricGammaSet& s = es.sets.front();
        rep.alpha = build_alpha_private_cycle(g, s.d1.to_vector());
        rep.detail.sym = s;
        rep.detail.u1 = rep.alpha(s.d1.to_vector().back());
        break;
      }
      case EvenStructureKind::DISJOINT_FAMILY: {
        rep.route = WitnessRoute::THEOREM6;
        ChainIndexing ci = build_chain_indexing(g, es.sets);
        rep.alpha = build_alpha_chain(ci, n);
        rep.detail.chain = ci;
        rep.detail.family = es.sets;
        break;
      }
    }
    rep.gamma_prism = prism_gamma(g, rep.alpha);
    rep.found = true;
    rep.violation = rep.gamma_prism <= rep.gamma_g;
    return rep;
  }

  rep.route = WitnessRoute::FALLBACK_SEARCH;
  auto alpha = fallback_witness_search(g, opts);
  if (!alpha) {
    rep.detail.method = "exhausted";
    return rep;  // found stays false
  }
  rep.alpha = *alpha;
  rep.detail.method = alpha->is_identity() ? "identity"
                      : n <= 7             ? "exhaustive"
                                           : "random";
  rep.gamma_prism = prism_gamma(g, rep.alpha);
  rep.found = true;
  rep.violation = rep.gamma_prism <= rep.gamma_g;
  return rep;
}

}  // namespace domfix
