#include <gtest/gtest.h>

#include "hamfix/models.hpp"
#include "hamfix/solver.hpp"
#include "oracles.hpp"

using namespace hamfix;

// The pruned search agrees with unpruned enumeration of every divisor choice.

TEST(BruteForce, ProjectivePlane) {
  auto brute = oracle::brute_force_systems(false, {0, 1, 2});
  ASSERT_EQ(brute.size(), 1u);
  EXPECT_EQ(brute[0], cpn_model({0, 1, 2}));
  EXPECT_EQ(enumerate_weight_systems(RingSpec::projective_space(2), {0, 1, 2}).systems, brute);
}

TEST(BruteForce, ProjectiveSpaces) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::int64_t> phis;
    for (int i = 0; i <= n; ++i) phis.push_back(i);
    auto brute = oracle::brute_force_systems(false, phis);
    ASSERT_EQ(brute.size(), 1u) << n;
    EXPECT_EQ(enumerate_weight_systems(RingSpec::projective_space(n), phis).systems, brute) << n;
  }
}

TEST(BruteForce, SpreadMomentValues) {
  for (auto phis : std::vector<std::vector<std::int64_t>>{{0, 2, 6}, {0, 6, 12}, {0, 4, 6, 12}, {0, 2, 4, 8}}) {
    auto n = static_cast<int>(phis.size()) - 1;
    EXPECT_EQ(enumerate_weight_systems(RingSpec::projective_space(n), phis).systems,
              oracle::brute_force_systems(false, phis));
  }
}

TEST(BruteForce, Quadrics) {
  auto q3 = oracle::brute_force_systems(true, {-2, -1, 1, 2});
  ASSERT_EQ(q3.size(), 1u);
  EXPECT_EQ(q3[0], quadric_model(3, {2, 1}));
  EXPECT_EQ(enumerate_weight_systems(RingSpec::quadric(3), {-2, -1, 1, 2}).systems, q3);

  EXPECT_TRUE(oracle::brute_force_systems(true, {-2, -1, 1, 3}).empty());

  for (auto phis : std::vector<std::vector<std::int64_t>>{{-4, -1, 1, 4}, {-6, -2, 2, 6}, {-3, -2, -1, 1, 2, 3}}) {
    auto n = static_cast<int>(phis.size()) - 1;
    auto brute = oracle::brute_force_systems(true, phis);
    EXPECT_EQ(enumerate_weight_systems(RingSpec::quadric(n), phis).systems, brute);
  }
}
