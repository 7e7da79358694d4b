#include "powermonoid/literal.hpp"

#include <gtest/gtest.h>

#include "powermonoid/random.hpp"

namespace powermonoid {
namespace {

TEST(LiteralTest, ParsesBracesAndIntervals) {
  EXPECT_EQ(parse_set("{-1,0,2}"), FinSet::from_values({-1, 0, 2}));
  EXPECT_EQ(parse_set(" { 2 , -1, 0, 2 } "), FinSet::from_values({-1, 0, 2}));
  EXPECT_EQ(parse_set("-1..5"), FinSet::interval(-1, 5));
  EXPECT_EQ(parse_set("{+3}"), FinSet::singleton(3));
}

TEST(LiteralTest, CanonicalOutput) {
  EXPECT_EQ(to_string(FinSet::from_values({2, -1, 0})), "{-1,0,2}");
  EXPECT_EQ(to_string(FinSet::zero()), "{0}");
}

TEST(LiteralTest, RoundTrip) {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const FinSet x = random_set(rng, -100, 100);
    ASSERT_EQ(parse_set(to_string(x)), x);
  }
}

TEST(LiteralTest, ErrorsNameTheToken) {
  for (const char* bad : {"bad", "{}", "{1,,2}", "{1,2", "5..2", "{1;2}", "{99999999999999999999}", ""}) {
    EXPECT_THROW(parse_set(bad), ParseError) << bad;
  }
  try {
    parse_set("{1,x,2}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.token(), "x");
  }
}

}  // namespace
}  // namespace powermonoid
