#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domfix/fixer.hpp"
#include "domfix/graph.hpp"
#include "domfix/permutation.hpp"

namespace domfix {

enum class WitnessRoute {
  THEOREM4,
  THEOREM5,
  THEOREM6,
  IDENTITY,
  OBSERVATION2,
  FALLBACK_SEARCH,
  EDGELESS,
};

const char* route_name(WitnessRoute r);

// Row-linked indexing of the d1 parts X_1..X_m of a disjoint family of even
// symmetric gamma-sets: x[i][j] adjacent to x[i-1][j], and x[m-1][a[j]]
// adjacent to x[0][j] with a a bijection.
struct ChainIndexing {
  std::vector<std::vector<int>> x;
  std::vector<int> a;
};

struct WitnessDetail {
  std::optional<EvenStructureKind> structure;  // theorem routes
  std::optional<SymmetricGammaSet> sym;        // THEOREM4/5: [d1,d2] as used
  std::optional<int> u1;                       // THEOREM4/5 private neighbor
  std::optional<ChainIndexing> chain;          // THEOREM6
  std::vector<SymmetricGammaSet> family;       // THEOREM6
  std::optional<int> component;                // OBSERVATION2: lifted index
  std::optional<WitnessRoute> component_route; // OBSERVATION2
  std::optional<std::string> method;           // FALLBACK_SEARCH phase
};

struct WitnessReport {
  WitnessRoute route = WitnessRoute::IDENTITY;
  int gamma_g = 0;
  int gamma_prism = -1;          // -1 when no witness was found
  int gamma_prism_identity = 0;  // gamma of the identity prism
  bool found = false;
  bool violation = false;  // constructed permutation failed the strict increase
  Permutation alpha;
  WitnessDetail detail;
};

// Smallest neighbor of x1 avoided by the neighborhoods of the other listed
// vertices. Fails (contract violation) when none exists, which signals that
// d1 was not a 2-packing with deg(x1) >= 1.
int select_private_neighbor(const Graph& g, const std::vector<int>& d1, int x1);

// The cycle (x1 x2 ... xk u1) with u1 = select_private_neighbor, fixing all
// other vertices.
Permutation build_alpha_private_cycle(const Graph& g, const std::vector<int>& d1);

// Rows are linked by unique neighbors: row 0 is the first row sorted
// ascending, row i+1 under it position by position, and a closes row m-1
// back onto row 0. A vertex with zero or two-plus neighbors in the next row
// means the family was invalid.
ChainIndexing build_chain_indexing(const Graph& g,
                                   const std::vector<BitSet>& rows);
ChainIndexing build_chain_indexing(const Graph& g,
                                   const std::vector<SymmetricGammaSet>& family);

// x[i][j] -> x[i+1][j] for i < m-1, x[m-1][a[j]] -> x[0][j+1 mod k],
// identity elsewhere.
Permutation build_alpha_chain(const ChainIndexing& ci, int n);

// Extends a permutation of one component to all of g, fixing the rest.
Permutation compose_component_witness(const Graph& g,
                                      const std::vector<Component>& components,
                                      int j, const Permutation& pi_j);

struct AdversaryOptions {
  long long fallback_budget = 100000;
  uint64_t seed = 0;
  FixerOptions fixer;
};

// Identity first, then exhaustive permutations for n <= 7, then seeded
// random sampling up to the budget. Requires at least one edge.
std::optional<Permutation> fallback_witness_search(
    const Graph& g, const AdversaryOptions& opts = {});

// Per-graph verdict: a permutation raising gamma, or proof the graph is
// edgeless. Dispatches to the construction matching the graph's structure
// and recomputes gamma(alpha G) before returning.
WitnessReport find_witness(const Graph& g, const AdversaryOptions& opts = {});

}  // namespace domfix
