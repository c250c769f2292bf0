#include <gtest/gtest.h>

#include "covred/generate.hpp"
#include "covred/related.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using namespace covred;
using namespace fixtures;

TEST(Related, FamilyOfEightObjectSystem) {
  const auto s = eight_objects();
  const auto f = related_family(s);
  EXPECT_EQ(f.of(0), covs(5, {1, 3, 5}));
  EXPECT_EQ(f.of(1), covs(5, {1, 2, 3, 4, 5}));
  EXPECT_EQ(f.of(2), covs(5, {1, 2, 3, 4, 5}));
  for (ObjectId x : {3, 4, 5}) EXPECT_EQ(f.of(x), covs(5, {1, 2, 4, 5}));
  EXPECT_EQ(f.of(6), covs(5, {2, 4}));
  EXPECT_EQ(f.of(7), covs(5, {2, 4}));
  EXPECT_EQ(f.positive(), s.universe());
  EXPECT_EQ(f.distinct().size(), 4u);
}

TEST(Related, WitnessBlocksOfEightObjectSystem) {
  const auto w = witness_blocks(eight_objects());
  auto witnesses = [&](std::size_t c) {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < w.block_class[c].size(); ++b)
      if (w.is_witness(c, b)) out.push_back(b);
    return out;
  };
  EXPECT_EQ(witnesses(0), (std::vector<std::size_t>{0, 2, 3, 4}));
  EXPECT_EQ(witnesses(2), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(w.by_class[0][0], (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(w.by_class[2][2], std::vector<std::size_t>{});
}

TEST(Related, ObjectsOutsidePositiveRegionHaveEmptyRows) {
  const auto f = related_family(single_covering());
  EXPECT_FALSE(f.contains(6));
  EXPECT_FALSE(f.contains(7));
  EXPECT_TRUE(f.contains(0));
  EXPECT_EQ(f.positive(), objs(8, {1, 2, 3, 4, 5, 6}));
}

TEST(Related, ContainingClassOfStraddlingBlockIsNpos) {
  const auto d = eight_decision();
  EXPECT_EQ(containing_class(objs(8, {7, 8}), d), 2u);
  EXPECT_EQ(containing_class(objs(8, {6, 7}), d), npos);
}

TEST(Related, FamilyRowsGrowAndShrink) {
  RelatedFamily f(2, 70);
  f.insert(1, 69);
  f.append_object();
  f.insert(2, 3);
  EXPECT_TRUE(f.has(1, 69));
  f.erase_object(0);
  EXPECT_EQ(f.universe_size(), 2u);
  EXPECT_TRUE(f.has(0, 69));
  EXPECT_TRUE(f.has(1, 3));
  f.erase(0, 69);
  EXPECT_FALSE(f.contains(0));
}

TEST(Related, AgreesWithDefinitionOnRandomSystems) {
  Rng rng(21);
  for (int t = 0; t < 500; ++t) {
    const auto s = random_system(rng);
    const auto f = related_family(s);
    for (std::size_t x = 0; x < s.universe_size(); ++x) EXPECT_EQ(f.of(x).indices(), oracle::related(s, x));
  }
}

TEST(Related, PositiveRegionIsWhereFamilyIsNonEmpty) {
  Rng rng(22);
  for (int t = 0; t < 300; ++t) {
    const auto s = random_system(rng);
    EXPECT_EQ(related_family(s).positive(), positive_region(s, s.all_coverings()));
  }
}

}  // namespace
