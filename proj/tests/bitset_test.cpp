#include <gtest/gtest.h>

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "covred/bitset.hpp"

namespace {

struct T {};
using Set = covred::BasicBitSet<T>;

TEST(BitSet, EmptyAndFull) {
  Set e(130);
  EXPECT_TRUE(e.none());
  EXPECT_EQ(e.count(), 0u);
  EXPECT_EQ(e.first(), Set::npos);
  auto f = Set::full(130);
  EXPECT_EQ(f.count(), 130u);
  EXPECT_EQ(f.complement(), e);
  EXPECT_EQ(Set::full(0).count(), 0u);
}

TEST(BitSet, IterationVisitsMembersInOrder) {
  Set s(200, {0, 63, 64, 127, 199});
  EXPECT_EQ(s.indices(), (std::vector<std::size_t>{0, 63, 64, 127, 199}));
  std::vector<std::size_t> seen(s.begin(), s.end());
  EXPECT_EQ(seen, s.indices());
}

TEST(BitSet, SetAlgebra) {
  Set a(70, {1, 2, 65}), b(70, {2, 3});
  EXPECT_EQ(a | b, Set(70, {1, 2, 3, 65}));
  EXPECT_EQ(a & b, Set(70, {2}));
  EXPECT_EQ(a - b, Set(70, {1, 65}));
  EXPECT_TRUE(Set(70, {2}).is_proper_subset_of(a));
  EXPECT_FALSE(a.is_proper_subset_of(a));
  EXPECT_TRUE(a.is_subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE(Set(70, {0}).intersects(b));
}

TEST(BitSet, SizeMismatchAndRangeErrorsThrow) {
  Set a(5), b(6);
  EXPECT_THROW(a |= b, std::invalid_argument);
  EXPECT_THROW(a.set(5), std::out_of_range);
  EXPECT_THROW(a.reset(9), std::out_of_range);
}

TEST(BitSet, ComplementStaysInsideUniverse) {
  Set a(67, {0, 66});
  auto c = a.complement();
  EXPECT_EQ(c.count(), 65u);
  EXPECT_EQ(c.complement(), a);
}

TEST(BitSet, ResizedKeepsLowBits) {
  Set a(70, {1, 65, 69});
  EXPECT_EQ(a.resized(66), Set(66, {1, 65}));
  EXPECT_EQ(a.resized(200), Set(200, {1, 65, 69}));
}

TEST(BitSet, WithoutIndexShiftsHigherBitsDown) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 200;
    Set s(n);
    std::set<std::size_t> ref;
    for (std::size_t i = 0; i < n; ++i)
      if (rng() % 3 == 0) {
        s.set(i);
        ref.insert(i);
      }
    const std::size_t d = rng() % n;
    std::vector<std::size_t> expect;
    for (auto i : ref)
      if (i != d) expect.push_back(i > d ? i - 1 : i);
    auto r = s.without_index(d);
    EXPECT_EQ(r.size(), n - 1);
    EXPECT_EQ(r.indices(), expect) << "n=" << n << " d=" << d;
  }
}

TEST(BitSet, CanonicalOrderIsBySizeThenLexicographic) {
  Set a(5, {0, 1}), b(5, {0, 3}), c(5, {1, 2}), d(5, {4});
  EXPECT_TRUE(covred::canonical_less(d, a));
  EXPECT_TRUE(covred::canonical_less(a, b));
  EXPECT_TRUE(covred::canonical_less(b, c));
  EXPECT_FALSE(covred::canonical_less(c, b));
  EXPECT_FALSE(covred::canonical_less(a, a));
}

TEST(BitSet, EqualSetsHashEqually) {
  Set a(90, {3, 80}), b(90);
  b.set(80).set(3);
  EXPECT_EQ(a, b);
  EXPECT_EQ(covred::BitSetHash<T>{}(a), covred::BitSetHash<T>{}(b));
}

}  // namespace
