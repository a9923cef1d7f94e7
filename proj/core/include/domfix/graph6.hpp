#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "domfix/graph.hpp"

namespace domfix {

// Parse failure; offset() is the byte position in the input that triggered
// it (input length for truncation).
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

// Largest order accepted by parse_graph6. The format itself goes much
// higher, but adjacency matrices past this point are not useful here.
inline constexpr int kGraph6MaxVertices = 32768;

// Decode one graph6 string. Accepts the optional >>graph6<< header and the
// three order encodings (short, '~' 3-byte, '~~' 6-byte). Rejects trailing
// bytes, short bodies, characters outside 63..126 and nonzero padding bits.
Graph parse_graph6(std::string_view s);

// Encode using the shortest order form. parse_graph6(write_graph6(g))
// reproduces g exactly.
std::string write_graph6(const Graph& g);

}  // namespace domfix
