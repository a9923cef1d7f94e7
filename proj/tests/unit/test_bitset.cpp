#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "domfix/bitset.hpp"

using domfix::BitSet;

TEST_CASE("set, test, reset with bounds") {
  BitSet b(10);
  CHECK(b.none());
  CHECK(b.count() == 0);
  b.set(3);
  b.set(7);
  CHECK(b.test(3));
  CHECK_FALSE(b.test(4));
  CHECK(b.count() == 2);
  CHECK(b.any());
  b.reset(3);
  CHECK_FALSE(b.test(3));
  CHECK_THROWS_AS(b.set(10), std::out_of_range);
  CHECK_THROWS_AS(b.test(-1), std::out_of_range);
  CHECK_THROWS_AS(b.reset(11), std::out_of_range);
}

TEST_CASE("set algebra") {
  BitSet a(8), b(8);
  a.set(1);
  a.set(2);
  a.set(5);
  b.set(2);
  b.set(6);
  CHECK((a | b).count() == 4);
  CHECK((a & b).count() == 1);
  CHECK((a ^ b).count() == 3);
  CHECK((a - b).count() == 2);
  CHECK(a.intersects(b));
  BitSet c(8);
  c.set(2);
  CHECK(a.contains(c));
  CHECK_FALSE(c.contains(a));
  CHECK(c.complement().count() == 7);
  CHECK(BitSet::full(8).count() == 8);
  CHECK(BitSet::full(8).complement().none());
  CHECK(a == a);
  CHECK(a != b);
}

TEST_CASE("operations reject mixed universes") {
  BitSet a(8), b(9);
  CHECK_THROWS_AS(a | b, std::invalid_argument);
  CHECK_THROWS_AS(a & b, std::invalid_argument);
  CHECK_THROWS_AS(a.intersects(b), std::invalid_argument);
  CHECK_THROWS_AS(a.contains(b), std::invalid_argument);
}

TEST_CASE("iteration crosses word boundaries") {
  BitSet b(130);
  for (int i : {0, 63, 64, 100, 129}) b.set(i);
  CHECK(b.first() == 0);
  CHECK(b.next(0) == 63);
  CHECK(b.next(63) == 64);
  CHECK(b.next(64) == 100);
  CHECK(b.next(129) == -1);
  CHECK(b.to_vector() == std::vector<int>{0, 63, 64, 100, 129});
  int sum = 0;
  b.for_each([&](int v) { sum += v; });
  CHECK(sum == 0 + 63 + 64 + 100 + 129);
  CHECK(b.complement().count() == 125);
  CHECK(b.count() == 5);
}

TEST_CASE("empty universe") {
  BitSet b(0);
  CHECK(b.none());
  CHECK(b.first() == -1);
  CHECK(b.complement().none());
  CHECK(b == BitSet::full(0));
}

TEST_CASE("lex order compares by smallest differing element") {
  BitSet a(6), b(6);
  a.set(0);
  a.set(5);
  b.set(1);
  b.set(2);
  CHECK(lex_less(a, b));
  CHECK_FALSE(lex_less(b, a));
  CHECK_FALSE(lex_less(a, a));
  BitSet c = a;
  c.set(1);
  CHECK(lex_less(a, c) != lex_less(c, a));
}

TEST_CASE("complement trims past the universe") {
  BitSet b(70);
  b.set(69);
  BitSet c = b.complement();
  CHECK(c.count() == 69);
  CHECK_FALSE(c.test(69));
  CHECK((b | c) == BitSet::full(70));
}
