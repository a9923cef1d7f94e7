#pragma once

#include <functional>

#include "domfix/graph.hpp"

namespace domfix {

struct DominationCertificate {
  int gamma = 0;
  BitSet witness;
};

// True iff N[d] = V.
bool is_dominating(const Graph& g, const BitSet& d);

// True iff b is contained in N[a].
bool dominates_set(const Graph& g, const BitSet& a, const BitSet& b);

// Subset enumeration by increasing size; reference oracle for gamma_exact.
// Refuses graphs larger than cap.
DominationCertificate gamma_bruteforce(const Graph& g, int cap = 24);

// Branch and bound. Branches on the uncovered vertex with the fewest
// non-banned closed-neighborhood candidates (ties to the lowest label);
// lower bound ceil(uncovered / (maxdeg+1)), upper bound seeded by greedy
// max coverage. Deterministic.
DominationCertificate gamma_exact(const Graph& g);

// Calls visit for every dominating set of exactly the given size, in
// lexicographic order. visit returns false to stop early.
void enumerate_gamma_sets(const Graph& g, int size,
                          const std::function<bool(const BitSet&)>& visit);

// True iff members of s have pairwise disjoint closed neighborhoods.
bool is_two_packing(const Graph& g, const BitSet& s);

// True iff no strict superset of s is a 2-packing. Requires s itself to be
// a 2-packing.
bool is_maximal_two_packing(const Graph& g, const BitSet& s);

}  // namespace domfix
