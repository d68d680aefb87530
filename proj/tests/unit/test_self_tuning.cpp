#include <gtest/gtest.h>

#include "glis/error.hpp"
#include "glis/self_tuning.hpp"

TEST(SelfTuningScore, HandExpansionSmallestCase) {
  // n_max = 2: h = 0 uses min of the first value (weight 1), h = 1 the first two (weight 2).
  EXPECT_DOUBLE_EQ(glis::self_tuning_score({{3.0, 1.0}}, 2), 3.0 + 2.0 * 1.0);
  EXPECT_DOUBLE_EQ(glis::self_tuning_score({{1.0, 3.0}}, 2), 1.0 + 2.0 * 1.0);
  EXPECT_DOUBLE_EQ(glis::self_tuning_score({{3.0, 1.0}, {2.0, 2.0}}, 2), 5.0 + 6.0);
}

TEST(SelfTuningScore, FourSamples) {
  // h = 0..2 over prefixes of length 2, 3, 4.
  EXPECT_DOUBLE_EQ(glis::self_tuning_score({{5.0, 4.0, 2.0, 3.0}}, 4), 4.0 + 2.0 * 2.0 + 3.0 * 2.0);
}

TEST(SelfTuningScore, Validation) {
  EXPECT_THROW(glis::self_tuning_score({{1.0, 2.0, 3.0}}, 3), glis::Error);
  EXPECT_THROW(glis::self_tuning_score({{1.0}}, 2), glis::Error);
  EXPECT_THROW(glis::self_tuning_score({{1.0, 2.0}}, 0), glis::Error);
}

TEST(SelfTuningObjective, DoublingRunsRoughlyDoubles) {
  glis::SelfTuningOptions o;
  o.n_tests = 5;
  const double one = glis::self_tuning_objective(0.8215, 2.6788, 1.3296, o, 3);
  o.n_tests = 10;
  const double two = glis::self_tuning_objective(0.8215, 2.6788, 1.3296, o, 3);
  EXPECT_GT(two / one, 1.6);
  EXPECT_LT(two / one, 2.4);
}

TEST(SelfTuningObjective, DeterministicAndTunedSettingWins) {
  glis::SelfTuningOptions o;
  o.n_tests = 10;
  EXPECT_EQ(glis::self_tuning_objective(1, 1, 0.5, o, 2), glis::self_tuning_objective(1, 1, 0.5, o, 2));
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    if (glis::self_tuning_objective(0.8215, 2.6788, 1.3296, o, seed) <
        glis::self_tuning_objective(1.0, 1.0, 0.5, o, seed)) {
      ++wins;
    }
  }
  EXPECT_GE(wins, 3);
}
