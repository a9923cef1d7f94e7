#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domfix/domination.hpp"
#include "domfix/graph.hpp"
#include "domfix/permutation.hpp"

namespace domfix {

// Gamma-set D split as [d1, d2] with d1 dominating V \ d2 and d2
// dominating V \ d1. Search results are normalized: d1 holds the smallest
// label of D.
struct SymmetricGammaSet {
  BitSet d1;
  BitSet d2;

  BitSet whole() const { return d1 | d2; }
  bool even() const { return d1.count() == d2.count(); }
};

struct FixerOptions {
  long long gamma_set_limit = 1000000;
};

// Thrown when a graph has more gamma-sets than the configured limit.
class EnumerationLimitError : public std::runtime_error {
 public:
  explicit EnumerationLimitError(long long limit)
      : std::runtime_error("gamma-set enumeration exceeded limit " +
                           std::to_string(limit)),
        limit_(limit) {}

  long long limit() const { return limit_; }

 private:
  long long limit_;
};

// All symmetric gamma-sets of a connected graph on >= 2 vertices, ordered
// by gamma-set (lexicographic) then by partition bitmask. Empty exactly
// when the graph is not a prism fixer.
std::vector<SymmetricGammaSet> find_symmetric_gamma_sets(
    const Graph& g, const FixerOptions& opts = {});

struct PrismFixerResult {
  bool fixer = false;
  int gamma = 0;
  int gamma_prism = 0;  // gamma of the identity prism
  std::optional<SymmetricGammaSet> witness;
};

// Decides gamma(G box K2) = gamma(G) for a nontrivial connected graph, both
// via symmetric gamma-set search and by direct prism computation; throws
// logic_error if the two disagree.
PrismFixerResult is_prism_fixer(const Graph& g, const FixerOptions& opts = {});

// Hartnell-Rall condition: every vertex outside D adjacent to exactly one
// vertex of d1 and one of d2; every vertex of D with >= 2 outside neighbors.
bool check_hartnell_rall_c(const Graph& g, const SymmetricGammaSet& s);

struct PiFixerWitness {
  BitSet d1;
  BitSet d2;
};

// Searches for a gamma-set D and ordered partition D = d1 u d2 (parts may
// be empty) with d1 dominating V \ d2, pi(D) a gamma-set, and pi(d2)
// dominating V \ pi(d1). Present exactly when gamma(piG) = gamma(G).
std::optional<PiFixerWitness> check_pi_fixer_condition(
    const Graph& g, const Permutation& pi, const FixerOptions& opts = {});

// With parts oriented so |A1| <= |A2| and |B1| <= |B2|: if |A1| < |B1| then
// A2 must meet B1; if |B1| = |A1| < |A2| then A2 must meet B2; otherwise
// vacuously true.
bool check_intersection_property(const SymmetricGammaSet& a,
                                 const SymmetricGammaSet& b);

// Structural facts every symmetric gamma-set carries: D independent, both
// parts maximal 2-packings, every vertex of degree >= 2, and each part's
// degree sum equal to n - |D|.
bool check_symmetric_invariants(const Graph& g, const SymmetricGammaSet& s);

enum class EvenStructureKind { NO_EVEN, PIVOT, DISJOINT_FAMILY };

struct EvenStructure {
  EvenStructureKind kind = EvenStructureKind::NO_EVEN;
  // PIVOT: the single pivot set. DISJOINT_FAMILY: a maximal pairwise
  // disjoint family (>= 2 sets) collected greedily in enumeration order.
  std::vector<SymmetricGammaSet> sets;
};

// Structure of the even symmetric gamma-sets of a prism fixer: none exist,
// some set meets every other even set (first such wins), or a disjoint
// family of at least two exists.
EvenStructure classify_even_structure(const Graph& g,
                                      const FixerOptions& opts = {});

// Same classification computed from an already-found list of symmetric
// gamma-sets (must be nonempty and in enumeration order).
EvenStructure classify_even_structure(
    const std::vector<SymmetricGammaSet>& sets);

}  // namespace domfix
