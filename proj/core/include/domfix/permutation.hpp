#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "domfix/bitset.hpp"
#include "domfix/rng.hpp"

namespace domfix {

// Bijection on 0..n-1.
class Permutation {
 public:
  Permutation() = default;

  // Identity on n labels.
  static Permutation identity(int n);

  // Validates that mapping is a bijection.
  explicit Permutation(std::vector<int> mapping);

  // Disjoint-cycle notation, e.g. "(0 2 1)(3)". Fixed points may be
  // omitted; "()" and the empty string mean the identity.
  static Permutation from_cycles(int n, std::string_view text);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int v) const;

  bool is_identity() const;
  Permutation inverse() const;

  BitSet apply(const BitSet& s) const;

  // Nontrivial cycles, each starting at its smallest label, ordered by
  // that label. Identity gives an empty list.
  std::vector<std::vector<int>> cycles() const;
  std::string cycle_string() const;

  bool operator==(const Permutation& o) const { return map_ == o.map_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }

 private:
  std::vector<int> map_;
};

// Fisher-Yates draw; consumes n-1 bounded values from the generator.
Permutation random_permutation(int n, SplitMix64& rng);

}  // namespace domfix
