#pragma once

#include <cstdint>
#include <vector>

#include "domfix/graph.hpp"

namespace gengraphs {

// Graphs on n <= 11 vertices packed as upper-triangle bits in column-major
// order (pair (u,v), u < v, at bit v*(v-1)/2 + u), matching graph6 bit order.

domfix::Graph decode(int n, uint64_t code);
uint64_t encode(const domfix::Graph& g);
bool code_connected(int n, uint64_t code);

// All isomorphism classes of simple graphs for each order 1..max_n, built by
// vertex augmentation with invariant-bucketed exact isomorphism rejection.
// result[n] lists codes in generation order; result[0] is empty.
std::vector<std::vector<uint64_t>> enumerate_all(int max_n);

}  // namespace gengraphs
