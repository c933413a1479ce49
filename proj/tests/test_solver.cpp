#include <gtest/gtest.h>

#include "hamfix/error.hpp"
#include "hamfix/models.hpp"
#include "hamfix/solver.hpp"

using namespace hamfix;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(Targets, NegativeProducts) {
  auto cp = lambda_minus_targets(RingSpec::projective_space(2), {0, 1, 2});
  EXPECT_EQ(cp, (std::vector<Rat>{1, -1, 2}));
  auto q = lambda_minus_targets(RingSpec::quadric(3), {-2, -1, 1, 2});
  EXPECT_EQ(q[0], Rat(1));
  EXPECT_EQ(q[2], Rat(3));
}

TEST(Targets, PositiveProducts) {
  auto cp = positive_targets(RingSpec::projective_space(2), {0, 1, 2});
  EXPECT_EQ(cp[0], Rat(2));
  EXPECT_EQ(cp[2], Rat(1));
  auto q = positive_targets(RingSpec::quadric(3), {-2, -1, 1, 2});
  EXPECT_EQ(q[1], Rat(3));
  EXPECT_EQ(q[3], Rat(1));
}

TEST(Targets, Errors) {
  EXPECT_EQ(kind_of([] { lambda_minus_targets(RingSpec::projective_space(3), {0, 1, 2}); }), ErrorKind::SpecMismatch);
  EXPECT_EQ(kind_of([] { positive_targets(RingSpec::projective_space(2), {0, 2, 1}); }), ErrorKind::NonIncreasing);
}

TEST(Enumerate, UniqueSystems) {
  auto cp1 = enumerate_weight_systems(RingSpec::projective_space(1), {0, 1});
  ASSERT_EQ(cp1.systems.size(), 1u);
  EXPECT_EQ(cp1.systems[0], cpn_model({0, 1}));

  auto cp2 = enumerate_weight_systems(RingSpec::projective_space(2), {0, 1, 2});
  ASSERT_EQ(cp2.systems.size(), 1u);
  EXPECT_EQ(cp2.systems[0], cpn_model({0, 1, 2}));
  EXPECT_TRUE(cp2.uniqueness_claimed);

  auto q3 = enumerate_weight_systems(RingSpec::quadric(3), {-2, -1, 1, 2});
  ASSERT_EQ(q3.systems.size(), 1u);
  EXPECT_EQ(q3.systems[0], quadric_model(3, {2, 1}));
}

TEST(Enumerate, NoSystemWithOddHalfWeight) {
  EXPECT_TRUE(enumerate_weight_systems(RingSpec::quadric(3), {-2, -1, 1, 3}).systems.empty());
}

TEST(Enumerate, OtherRingMakesNoUniquenessClaim) {
  auto r = enumerate_weight_systems(RingSpec::other({1, 1, make_rat(1, 5), make_rat(1, 5)}), {0, 1, 5, 6});
  EXPECT_FALSE(r.uniqueness_claimed);
}

TEST(Enumerate, BudgetExceeded) {
  SolveOptions opts;
  opts.budget = 2;
  EXPECT_EQ(kind_of([&] { enumerate_weight_systems(RingSpec::projective_space(4), {0, 1, 2, 3, 4}, opts); }),
            ErrorKind::SearchBudgetExceeded);
}

TEST(Enumerate, Cancellation) {
  std::stop_source src;
  src.request_stop();
  SolveOptions opts;
  opts.stop = src.get_token();
  EXPECT_EQ(kind_of([&] { enumerate_weight_systems(RingSpec::projective_space(3), {0, 1, 2, 3}, opts); }),
            ErrorKind::SearchBudgetExceeded);
}

TEST(Enumerate, JobsDoNotChangeTheAnswer) {
  SolveOptions one, four;
  four.jobs = 4;
  auto a = enumerate_weight_systems(RingSpec::quadric(5), {-3, -2, -1, 1, 2, 3}, one);
  auto b = enumerate_weight_systems(RingSpec::quadric(5), {-3, -2, -1, 1, 2, 3}, four);
  EXPECT_EQ(a.systems, b.systems);
  EXPECT_EQ(a.nodes_visited, b.nodes_visited);
}

TEST(Verify, AllLinesPass) {
  auto cp = verify_equivalence(RingSpec::projective_space(3), {0, 1, 2, 3});
  EXPECT_TRUE(cp.passed());
  ASSERT_EQ(cp.lines.size(), 4u);
  auto q = verify_equivalence(RingSpec::quadric(3), {-2, -1, 1, 2});
  EXPECT_TRUE(q.passed());
  bool c1_line = false;
  for (const auto& l : q.lines)
    if (l.name == "(4)=>(1)") {
      c1_line = true;
      EXPECT_NE(l.detail.find("C = 3"), std::string::npos) << l.detail;
    }
  EXPECT_TRUE(c1_line);
}

TEST(Verify, OddHalfWeightFails) {
  auto r = verify_equivalence(RingSpec::quadric(3), {-2, -1, 1, 3});
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.lines.at(0).passed);
}

TEST(Infer, ExceptionalCases) {
  auto one = infer_moment_values({{1, 2, 3}, {-1, 1, 4}, {-4, -1, 1}, {-1, -2, -3}});
  EXPECT_EQ(one.moment_values(), (std::vector<Rat>{0, 1, 5, 6}));
  EXPECT_EQ(one.c1, Rat(2));
  EXPECT_EQ(one.ring.r.at(2), make_rat(1, 5));

  auto two = infer_moment_values({{1, 2, 3}, {-1, 1, 5}, {-1, -5, 1}, {-1, -2, -3}});
  EXPECT_EQ(two.moment_values(), (std::vector<Rat>{0, 1, 11, 12}));
  EXPECT_EQ(two.c1, Rat(1));
  EXPECT_EQ(two.ring.r.at(2), make_rat(1, 22));
}

TEST(Infer, RoundTripAndReordering) {
  auto r = infer_moment_values({{-2, -1}, {1, 2}, {-1, 1}});
  EXPECT_EQ(r.data, cpn_model({0, 1, 2}));
  EXPECT_EQ(r.order, (std::vector<int>{1, 2, 0}));
  EXPECT_EQ(r.c1, Rat(3));
}

TEST(Infer, InconsistentGamma) {
  EXPECT_EQ(kind_of([] { infer_moment_values({{1, 2}, {-1, 4}, {-2, -1}}); }), ErrorKind::InconsistentGamma);
}
