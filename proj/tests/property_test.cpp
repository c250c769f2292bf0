#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

TEST(Property, ReductsMatchExhaustiveSearch) {
  covred::Rng rng(101);
  const auto t = props::static_oracle(rng, 200);
  EXPECT_TRUE(t.ok()) << props::describe(t);
}

TEST(Property, IncrementalUpdatesMatchRebuild) {
  covred::Rng rng(102);
  const auto t = props::dynamic_trials(rng, 200);
  EXPECT_TRUE(t.equivalence.ok()) << props::describe(t.equivalence);
  EXPECT_TRUE(t.theorems.ok()) << props::describe(t.theorems);
  EXPECT_TRUE(t.counters.ok()) << props::describe(t.counters);
  EXPECT_TRUE(t.round_trip.ok()) << props::describe(t.round_trip);
}

TEST(Property, ApproximationLaws) {
  covred::Rng rng(103);
  const auto t = props::approximation_laws(rng, 300);
  EXPECT_TRUE(t.ok()) << props::describe(t);
}

}  // namespace
