#include "powermonoid/boxing.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

#include "powermonoid/random.hpp"

namespace powermonoid {
namespace {

FinSet S(std::initializer_list<Int> v) { return FinSet::from_values(v); }

// Oracle: count positions whose left neighbour is missing.
std::size_t count_run_starts(const FinSet& x) {
  std::size_t n = 0;
  for (Int v : x) n += x.contains(v - 1) ? 0 : 1;
  return n;
}

TEST(BoxingTest, Runs) {
  EXPECT_EQ(runs(S({-5, -4, -2, 0, 1, 5, 6, 7})).runs(),
            (std::vector<powermonoid::Run>{{-5, -4}, {-2, -2}, {0, 1}, {5, 7}}));
  EXPECT_EQ(runs(FinSet::interval(-1, 5)).runs(), (std::vector<powermonoid::Run>{{-1, 5}}));
  EXPECT_EQ(runs(S({-1, 0, 1, 2, 3, 5})).runs(), (std::vector<powermonoid::Run>{{-1, 3}, {5, 5}}));
}

TEST(BoxingTest, Bdim) {
  EXPECT_EQ(bdim(S({-5, -4, -2, 0, 1, 5, 6, 7})), 4u);
  EXPECT_EQ(bdim(FinSet::interval(-9, 30)), 1u);
  EXPECT_EQ(bdim(S({0, 2, 4})), 3u);
}

TEST(BoxingTest, FromRuns) {
  EXPECT_EQ(from_runs(RunProfile({{-1, 5}})), FinSet::interval(-1, 5));
  EXPECT_EQ(from_runs(RunProfile({{-5, -4}, {-2, -2}, {0, 1}, {5, 7}})),
            S({-5, -4, -2, 0, 1, 5, 6, 7}));
  EXPECT_THROW(RunProfile({{0, 0}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(RunProfile({{0, 3}, {2, 5}}), std::invalid_argument);
  EXPECT_THROW(RunProfile({{3, 2}}), std::invalid_argument);
  EXPECT_THROW(RunProfile({}), std::invalid_argument);
}

TEST(BoxingTest, Endpoints) {
  EXPECT_EQ(runs(S({-2, 0, 1, 2, 5})).endpoints(), (std::vector<Int>{-2, -2, 0, 2, 5, 5}));
}

TEST(BoxingTest, RandomProperties) {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const FinSet x = random_set(rng, -40, 40);
    const RunProfile p = runs(x);
    ASSERT_EQ(from_runs(p), x);
    ASSERT_EQ(p.size(), count_run_starts(x));
    ASSERT_EQ(bdim(x), p.size());
    ASSERT_EQ(p[0].lo, x.min());
    ASSERT_EQ(p[p.size() - 1].hi, x.max());
    const FinSet y = random_set(rng, -40, 40);
    ASSERT_LE(bdim(x + y), bdim(x) * bdim(y));
  }
}

}  // namespace
}  // namespace powermonoid
