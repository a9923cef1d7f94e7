#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace domfix {

// Fixed-universe vertex set. Sets over universes of at most 64 vertices live
// in a single inline word; larger universes spill to a heap buffer. All
// binary operations require both operands to share the same universe size.
class BitSet {
 public:
  BitSet() = default;

  explicit BitSet(int universe) : n_(universe) {
    if (universe < 0) throw std::invalid_argument("BitSet: negative universe");
    if (!small()) big_.assign(word_count(), 0);
  }

  static BitSet full(int universe) {
    BitSet s(universe);
    for (int w = 0; w < s.word_count(); ++w) s.word(w) = ~uint64_t{0};
    s.trim();
    return s;
  }

  int universe() const { return n_; }

  bool test(int i) const {
    check_index(i);
    return (word(i >> 6) >> (i & 63)) & 1u;
  }

  void set(int i) {
    check_index(i);
    word(i >> 6) |= uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    check_index(i);
    word(i >> 6) &= ~(uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (int w = 0; w < word_count(); ++w) c += std::popcount(word(w));
    return c;
  }

  bool none() const {
    for (int w = 0; w < word_count(); ++w)
      if (word(w)) return false;
    return true;
  }

  bool any() const { return !none(); }

  BitSet& operator|=(const BitSet& o) {
    check_same(o);
    for (int w = 0; w < word_count(); ++w) word(w) |= o.word(w);
    return *this;
  }

  BitSet& operator&=(const BitSet& o) {
    check_same(o);
    for (int w = 0; w < word_count(); ++w) word(w) &= o.word(w);
    return *this;
  }

  BitSet& operator^=(const BitSet& o) {
    check_same(o);
    for (int w = 0; w < word_count(); ++w) word(w) ^= o.word(w);
    return *this;
  }

  // Set difference: remove every element of o.
  BitSet& operator-=(const BitSet& o) {
    check_same(o);
    for (int w = 0; w < word_count(); ++w) word(w) &= ~o.word(w);
    return *this;
  }

  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend BitSet operator^(BitSet a, const BitSet& b) { return a ^= b; }
  friend BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }

  BitSet complement() const {
    BitSet r(n_);
    for (int w = 0; w < word_count(); ++w) r.word(w) = ~word(w);
    r.trim();
    return r;
  }

  bool intersects(const BitSet& o) const {
    check_same(o);
    for (int w = 0; w < word_count(); ++w)
      if (word(w) & o.word(w)) return true;
    return false;
  }

  // True when o is a subset of this set.
  bool contains(const BitSet& o) const {
    check_same(o);
    for (int w = 0; w < word_count(); ++w)
      if (o.word(w) & ~word(w)) return false;
    return true;
  }

  bool operator==(const BitSet& o) const {
    if (n_ != o.n_) return false;
    for (int w = 0; w < word_count(); ++w)
      if (word(w) != o.word(w)) return false;
    return true;
  }

  bool operator!=(const BitSet& o) const { return !(*this == o); }

  // Smallest element, or -1 when empty.
  int first() const {
    for (int w = 0; w < word_count(); ++w)
      if (word(w)) return w * 64 + std::countr_zero(word(w));
    return -1;
  }

  // Smallest element strictly greater than i, or -1.
  int next(int i) const {
    ++i;
    if (i >= n_) return -1;
    int w = i >> 6;
    uint64_t cur = word(w) & (~uint64_t{0} << (i & 63));
    while (true) {
      if (cur) return w * 64 + std::countr_zero(cur);
      if (++w >= word_count()) return -1;
      cur = word(w);
    }
  }

  template <class F>
  void for_each(F f) const {
    for (int w = 0; w < word_count(); ++w) {
      uint64_t cur = word(w);
      while (cur) {
        f(w * 64 + std::countr_zero(cur));
        cur &= cur - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  // Orders sets by their sorted element lists ({0,1} < {0,2} < {1,2}): the
  // smaller set is the one owning the smallest element of the symmetric
  // difference.
  friend bool lex_less(const BitSet& a, const BitSet& b) {
    a.check_same(b);
    for (int w = 0; w < a.word_count(); ++w) {
      uint64_t diff = a.word(w) ^ b.word(w);
      if (diff) return a.word(w) & (diff & -diff);
    }
    return false;
  }

 private:
  bool small() const { return n_ <= 64; }
  int word_count() const { return small() ? (n_ > 0 ? 1 : 0) : (n_ + 63) / 64; }

  uint64_t word(int w) const { return small() ? small_ : big_[w]; }
  uint64_t& word(int w) { return small() ? small_ : big_[w]; }

  // Clear bits past the universe so count()/equality stay exact.
  void trim() {
    if (n_ == 0) return;
    int used = n_ & 63;
    if (used) word(word_count() - 1) &= (~uint64_t{0}) >> (64 - used);
  }

  void check_index(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("BitSet: index out of range");
  }

  void check_same(const BitSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("BitSet: universe mismatch");
  }

  int n_ = 0;
  uint64_t small_ = 0;
  std::vector<uint64_t> big_;
};

}  // namespace domfix
