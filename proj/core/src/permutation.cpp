#include "domfix/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace domfix {

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("Permutation: negative size");
  Permutation p;
  p.map_.resize(n);
  std::iota(p.map_.begin(), p.map_.end(), 0);
  return p;
}

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
  int n = static_cast<int>(map_.size());
  std::vector<char> seen(n, 0);
  for (int v : map_) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("Permutation: mapping is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::from_cycles(int n, std::string_view text) {
  std::vector<int> map(n);
  std::iota(map.begin(), map.end(), 0);
  std::vector<char> used(n, 0);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("Permutation: expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i >= text.size())
        throw std::invalid_argument("Permutation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("Permutation: expected label in cycle notation");
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > n) break;
        ++i;
      }
      if (v >= n)
        throw std::invalid_argument("Permutation: label out of range in cycle notation");
      if (used[v])
        throw std::invalid_argument("Permutation: repeated label in cycle notation");
      used[v] = 1;
      cyc.push_back(static_cast<int>(v));
    }
    for (size_t j = 0; j + 1 < cyc.size(); ++j) map[cyc[j]] = cyc[j + 1];
    if (cyc.size() > 1) map[cyc.back()] = cyc.front();
    skip_ws();
  }
  return Permutation(std::move(map));
}

int Permutation::operator()(int v) const {
  if (v < 0 || v >= size())
    throw std::out_of_range("Permutation: label out of range");
  return map_[v];
}

bool Permutation::is_identity() const {
  for (int v = 0; v < size(); ++v)
    if (map_[v] != v) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (int v = 0; v < size(); ++v) inv[map_[v]] = v;
  return Permutation(std::move(inv));
}

BitSet Permutation::apply(const BitSet& s) const {
  if (s.universe() != size())
    throw std::invalid_argument("Permutation: universe mismatch");
  BitSet r(size());
  s.for_each([&](int v) { r.set(map_[v]); });
  return r;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(map_.size(), 0);
  for (int v = 0; v < size(); ++v) {
    if (seen[v] || map_[v] == v) continue;
    std::vector<int> cyc;
    int u = v;
    do {
      seen[u] = 1;
      cyc.push_back(u);
      u = map_[u];
    } while (u != v);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& cyc : cs) {
    s += '(';
    for (size_t j = 0; j < cyc.size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(cyc[j]);
    }
    s += ')';
  }
  return s;
}

Permutation random_permutation(int n, SplitMix64& rng) {
  std::vector<int> map(n);
  std::iota(map.begin(), map.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(map[i], map[rng.bounded(static_cast<uint64_t>(i) + 1)]);
  return Permutation(std::move(map));
}

}  // namespace domfix
