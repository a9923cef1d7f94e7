#include "domfix/graph6.hpp"

#include <cstdint>

namespace domfix {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int value_at(std::string_view s, size_t pos) {
  if (pos >= s.size()) throw Graph6Error("graph6: truncated input", s.size());
  unsigned char c = s[pos];
  if (c < 63 || c > 126)
    throw Graph6Error("graph6: byte outside printable range", pos);
  return c - kBias;
}

// Reads the order and advances pos past it.
int64_t read_order(std::string_view s, size_t& pos) {
  int v = value_at(s, pos);
  if (v < 63) {
    ++pos;
    return v;
  }
  // '~' escape: three bytes of 6 bits each, or '~~' then six bytes.
  ++pos;
  int bytes = 3;
  if (value_at(s, pos) == 63) {
    ++pos;
    bytes = 6;
  }
  int64_t n = 0;
  for (int i = 0; i < bytes; ++i, ++pos) n = (n << 6) | value_at(s, pos);
  return n;
}

}  // namespace

Graph parse_graph6(std::string_view s) {
  size_t pos = 0;
  if (s.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= s.size()) throw Graph6Error("graph6: empty input", pos);

  size_t order_pos = pos;
  int64_t n64 = read_order(s, pos);
  if (n64 > kGraph6MaxVertices)
    throw Graph6Error("graph6: order exceeds supported maximum", order_pos);
  int n = static_cast<int>(n64);

  Graph g(n);
  int64_t bits = int64_t{n} * (n - 1) / 2;
  size_t body = (bits + 5) / 6;
  int u = 0, v = 1;
  for (size_t i = 0; i < body; ++i) {
    int acc = value_at(s, pos + i);
    for (int have = 6; have > 0;) {
      if (v >= n) {
        // Only zero padding may remain in the final byte.
        if (acc & ((1 << have) - 1))
          throw Graph6Error("graph6: nonzero padding bits", pos + i);
        break;
      }
      --have;
      if ((acc >> have) & 1) g.add_edge(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  if (pos + body != s.size())
    throw Graph6Error("graph6: trailing bytes", pos + body);
  return g;
}

std::string write_graph6(const Graph& g) {
  int n = g.n();
  std::string out;

  if (n <= 62) {
    out += static_cast<char>(n + kBias);
  } else if (n <= 258047) {
    out += '~';
    for (int sh = 12; sh >= 0; sh -= 6)
      out += static_cast<char>(((n >> sh) & 63) + kBias);
  } else {
    out += '~';
    out += '~';
    for (int sh = 30; sh >= 0; sh -= 6)
      out += static_cast<char>(((int64_t{n} >> sh) & 63) + kBias);
  }

  int acc = 0, have = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++have == 6) {
        out += static_cast<char>(acc + kBias);
        acc = 0;
        have = 0;
      }
    }
  if (have) out += static_cast<char>((acc << (6 - have)) + kBias);
  return out;
}

}  // namespace domfix
