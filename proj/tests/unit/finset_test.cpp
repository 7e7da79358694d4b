#include "powermonoid/finset.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "powermonoid/literal.hpp"
#include "powermonoid/random.hpp"

namespace powermonoid {
namespace {

FinSet S(std::initializer_list<Int> v) { return FinSet::from_values(v); }

// Independent oracle: every pairwise sum collected in a std::set.
FinSet brute_sum(const FinSet& x, const FinSet& y) {
  std::set<Int> out;
  for (Int a : x) {
    for (Int b : y) out.insert(a + b);
  }
  return FinSet::from_values(std::vector<Int>(out.begin(), out.end()));
}

TEST(FinSetTest, FromValuesSortsAndDeduplicates) {
  EXPECT_EQ(FinSet::from_values({2, 0, -1, 2}).values(), (std::vector<Int>{-1, 0, 2}));
  EXPECT_EQ(FinSet::from_values({0}), FinSet::zero());
  EXPECT_EQ(FinSet::from_values({5, -5, -4, 7, 6, 1, 0, -2}),
            S({-5, -4, -2, 0, 1, 5, 6, 7}));
  EXPECT_THROW(FinSet::from_values(std::vector<Int>{}), std::invalid_argument);
}

TEST(FinSetTest, Interval) {
  EXPECT_EQ(FinSet::interval(0, 1), S({0, 1}));
  EXPECT_EQ(FinSet::interval(-1, 5), S({-1, 0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(FinSet::interval(3, 3), S({3}));
  EXPECT_THROW(FinSet::interval(2, 1), std::invalid_argument);
  EXPECT_TRUE(FinSet::interval(-4, 9).is_interval());
  EXPECT_FALSE(S({0, 2}).is_interval());
}

TEST(FinSetTest, WorkedSums) {
  EXPECT_EQ(sumset(S({-1, 0, 2}), S({0, 1, 3})), S({-1, 0, 1, 2, 3, 5}));
  EXPECT_EQ(sumset(S({-1, 0, 2}), S({0, 2, 3})), FinSet::interval(-1, 5));
  const FinSet x = S({-7, 3, 40});
  EXPECT_EQ(FinSet::zero() + x, x);
  EXPECT_EQ(x + FinSet::zero(), x);
}

TEST(FinSetTest, KFold) {
  EXPECT_EQ(kfold(S({0, 1}), 4), FinSet::interval(0, 4));
  // Brute-force oracle for 2{-1,0,2}: all sums of two elements.
  EXPECT_EQ(brute_sum(S({-1, 0, 2}), S({-1, 0, 2})), S({-2, -1, 0, 1, 2, 4}));
  EXPECT_EQ(kfold(S({-1, 0, 2}), 2), S({-2, -1, 0, 1, 2, 4}));
  EXPECT_EQ(kfold(S({4, 9}), 0), FinSet::zero());
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const FinSet x = random_set(rng, -15, 15);
    const auto k = static_cast<std::uint64_t>(uniform_int(rng, 0, 9));
    ASSERT_EQ(kfold(x, k), kfold_repeated(x, k)) << to_string(x) << " k=" << k;
  }
}

TEST(FinSetTest, TranslateReflectNegate) {
  EXPECT_EQ(translate(S({-1, 0, 2}), 3), S({2, 3, 5}));
  EXPECT_EQ(translate(S({5, 6}), 0), S({5, 6}));
  EXPECT_EQ(translate(S({0, 1}), -1), S({-1, 0}));
  EXPECT_EQ(reflect(S({0, 2, 3}), 3), S({0, 1, 3}));
  EXPECT_EQ(reflect(S({-1, 0, 2}), 0), S({-2, 0, 1}));
  EXPECT_EQ(reflect(S({0}), 7), S({7}));
  EXPECT_EQ(negate(S({-1, 0, 2})), S({-2, 0, 1}));
}

TEST(FinSetTest, Bounds) {
  EXPECT_EQ(bounds(S({-5, -4, -2, 0, 1, 5, 6, 7})), (Bounds{-5, 7}));
  EXPECT_EQ(bounds(S({0})), (Bounds{0, 0}));
  EXPECT_EQ(bounds(S({-1, 0, 2})), (Bounds{-1, 2}));
}

TEST(FinSetTest, SumPathsAgreeWithOracle) {
  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    const FinSet x = random_set(rng, -200, 200);
    const FinSet y = random_set(rng, -200, 200);
    const FinSet expected = brute_sum(x, y);
    ASSERT_EQ(sumset_naive(x, y), expected);
    ASSERT_EQ(sumset_bitwise(x, y), expected);
    ASSERT_EQ(sumset(x, y), expected);
  }
}

TEST(FinSetTest, SumLaws) {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const FinSet x = random_set(rng, -30, 30);
    const FinSet y = random_set(rng, -30, 30);
    const FinSet z = random_set(rng, -30, 30);
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ(bounds(x + y).min, x.min() + y.min());
    ASSERT_EQ(bounds(x + y).max, x.max() + y.max());
    ASSERT_GE((x + y).size(), x.size() + y.size() - 1);
    ASSERT_LE((x + y).size(), x.size() * y.size());
  }
}

TEST(FinSetTest, IntervalClosure) {
  Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    Int a = uniform_int(rng, -50, 50), b = uniform_int(rng, -50, 50);
    Int c = uniform_int(rng, -50, 50), d = uniform_int(rng, -50, 50);
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    ASSERT_EQ(FinSet::interval(a, b) + FinSet::interval(c, d), FinSet::interval(a + c, b + d));
  }
}

TEST(FinSetTest, SparseWideSetsUseExactArithmetic) {
  const Int big = Int{1} << 50;
  const FinSet x = S({-big, 0, big});
  EXPECT_EQ(x + x, S({-2 * big, -big, 0, big, 2 * big}));
  EXPECT_THROW(sumset_bitwise(x, x), std::length_error);
}

TEST(FinSetTest, OverflowIsReported) {
  const Int top = std::numeric_limits<Int>::max();
  EXPECT_THROW(S({top}) + S({1}), std::overflow_error);
  EXPECT_THROW(kfold(S({0, top / 2 + 1}), 2), std::overflow_error);
}

TEST(FinSetTest, Containment) {
  EXPECT_TRUE(S({0, 2}).is_subset_of(S({-1, 0, 1, 2})));
  EXPECT_FALSE(S({0, 3}).is_subset_of(S({-1, 0, 1, 2})));
  EXPECT_TRUE(S({-1, 0, 2}).contains(2));
  EXPECT_FALSE(S({-1, 0, 2}).contains(1));
  EXPECT_EQ(set_union(S({0, 5}), S({1, 5})), S({0, 1, 5}));
}

}  // namespace
}  // namespace powermonoid
