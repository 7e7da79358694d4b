#include "powermonoid/proofsteps.hpp"

#include <gtest/gtest.h>

#include "powermonoid/literal.hpp"

#include <stdexcept>

#include "powermonoid/boxing.hpp"

namespace powermonoid {
namespace {

ZeroSet Z(std::initializer_list<Int> v) { return ZeroSet(FinSet::from_values(v)); }
FinSet S(std::initializer_list<Int> v) { return FinSet::from_values(v); }

TEST(ProofStepsTest, FirstDivergence) {
  const auto d1 = first_divergence(Z({-2, 0, 2, 5}), Z({-2, 0, 3, 5}));
  EXPECT_EQ(d1.index, std::optional<std::size_t>(4));
  EXPECT_EQ(d1.kind, DivergenceCase::kRunStart);
  const auto d2 = first_divergence(Z({-2, 0, 1, 2, 5}), Z({-2, 0, 1, 5}));
  EXPECT_EQ(d2.index, std::optional<std::size_t>(3));
  EXPECT_EQ(d2.kind, DivergenceCase::kRunEnd);
  const auto d3 = first_divergence(Z({-2, 0, 5}), Z({-2, 0, 5}));
  EXPECT_FALSE(d3.index.has_value());
  EXPECT_EQ(d3.kind, DivergenceCase::kNone);
  EXPECT_THROW(first_divergence(Z({-2, 0, 5}), Z({-2, 0, 6})), std::invalid_argument);
  EXPECT_THROW(first_divergence(Z({0, 5}), Z({0, 5})), std::invalid_argument);
}

TEST(ProofStepsTest, RunStartWitness) {
  const ZeroSet a = Z({-2, 0, 2, 5});
  const ZeroSet b = Z({-2, 0, 3, 5});
  const auto w = run_start_witness(a, b);
  EXPECT_TRUE(w.passed());
  EXPECT_EQ(w.helper_set, FinSet::interval(0, 1));
  EXPECT_EQ(w.witness_point, 2);
  EXPECT_EQ(w.lhs, S({-2, -1, 0, 1, 2, 3, 5, 6}));
  EXPECT_EQ(w.rhs, S({-2, -1, 0, 1, 3, 4, 5, 6}));
  EXPECT_TRUE(w.lhs.contains(2));
  EXPECT_FALSE(w.rhs.contains(2));
  EXPECT_EQ(bdim(a), 4u);
  // Measured by the run oracle: {-2..3} and {5,6}.
  EXPECT_EQ(bdim(w.lhs), 2u);
  EXPECT_THROW(run_start_witness(b, a), std::invalid_argument);
  EXPECT_THROW(run_start_witness(Z({-2, 0, 1, 2, 5}), Z({-2, 0, 1, 5})), std::invalid_argument);
}

TEST(ProofStepsTest, RunEndWitness) {
  const ZeroSet a = Z({-2, 0, 1, 2, 5});
  const ZeroSet b = Z({-2, 0, 1, 5});
  const auto w = run_end_witness(a, b, 11);
  EXPECT_TRUE(w.passed());
  EXPECT_EQ(w.c0, std::optional<Int>(11));
  EXPECT_EQ(w.h, std::optional<Int>(3));
  EXPECT_EQ(*w.shift_interval, FinSet::interval(5, 11));
  EXPECT_EQ(*w.shifted_lhs, FinSet::interval(3, 16));
  EXPECT_EQ(*w.shifted_rhs, FinSet::interval(3, 16));
  EXPECT_EQ(w.lhs, set_union(S({-2}), FinSet::interval(0, 16)));
  EXPECT_EQ(w.rhs, set_union(S({-2, 0, 1}), FinSet::interval(3, 16)));
  EXPECT_EQ(w.witness_point, 2);

  EXPECT_EQ(run_end_witness(a, b).c0, std::optional<Int>(11));
  const auto wide = run_end_witness(a, b, 15);
  EXPECT_TRUE(wide.passed());
  EXPECT_EQ(wide.witness_point, 2);
  EXPECT_THROW(run_end_witness(a, b, 5), std::invalid_argument);
  EXPECT_THROW(run_end_witness(b, a), std::invalid_argument);
}

TEST(ProofStepsTest, RunEndOfFirstRunIsRejected) {
  // Divergence at index 1: the first run already ends differently.
  EXPECT_THROW(run_end_witness(Z({-3, -2, 0, 4}), Z({-3, 0, 4})), std::invalid_argument);
}

TEST(ProofStepsTest, InductionMeasure) {
  EXPECT_EQ(induction_measure(ZeroSet(FinSet::interval(-1, 5)), ZeroSet(FinSet::interval(-1, 5))), 2u);
  EXPECT_EQ(induction_measure(Z({-2, 0, 2, 5}), Z({-2, 0, 3, 5})), 8u);
  EXPECT_EQ(induction_measure(Z({0}), Z({0})), 2u);
}

TEST(ProofStepsTest, RandomInstances) {
  Rng rng(77);
  for (int i = 0; i < 200; ++i) {
    const auto [a, b] = random_run_start_instance(rng);
    ASSERT_EQ(first_divergence(a, b).kind, DivergenceCase::kRunStart);
    const auto w = run_start_witness(a, b);
    ASSERT_TRUE(w.passed()) << to_string(a) << " " << to_string(b);
    ASSERT_FALSE(w.rhs.contains(w.witness_point));
  }
  for (int i = 0; i < 200; ++i) {
    const auto [a, b] = random_run_end_instance(rng);
    ASSERT_EQ(first_divergence(a, b).kind, DivergenceCase::kRunEnd);
    const auto w = run_end_witness(a, b);
    ASSERT_TRUE(w.passed()) << to_string(a) << " " << to_string(b);
    ASSERT_EQ(*w.shifted_lhs, *w.shifted_rhs);
  }
}

TEST(ProofStepsTest, Suites) {
  EXPECT_TRUE(theorem_step_suite(1, 3, 200).all_pass());
  EXPECT_TRUE(theorem_step_suite(2, 3, 200).all_pass());
  EXPECT_THROW(theorem_step_suite(3, 0, 1), std::invalid_argument);
}

}  // namespace
}  // namespace powermonoid
