#include <gtest/gtest.h>

#include "hamfix/error.hpp"
#include "hamfix/fixed_point.hpp"
#include "hamfix/models.hpp"

using namespace hamfix;

namespace {

FixedPointData cp2() { return cpn_model({0, 1, 2}); }

FixedPointData with_weights(const FixedPointData& d, int i, std::vector<Weight> ws) {
  auto pts = d.points();
  pts[static_cast<std::size_t>(i)].weights = std::move(ws);
  return FixedPointData(d.n(), pts);
}

FixedPointData with_phi(const FixedPointData& d, int i, Rat phi) {
  auto pts = d.points();
  pts[static_cast<std::size_t>(i)].moment_value = std::move(phi);
  return FixedPointData(d.n(), pts);
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rat("5"), Rat(5));
  EXPECT_EQ(parse_rat("-3/2"), make_rat(-3, 2));
  EXPECT_EQ(parse_rat("+4/6"), make_rat(2, 3));
  EXPECT_EQ(parse_rat("010"), Rat(10));
  EXPECT_FALSE(parse_rat("1/0"));
  EXPECT_FALSE(parse_rat(""));
  EXPECT_FALSE(parse_rat("1.5"));
  EXPECT_FALSE(parse_rat("2/-3"));
  EXPECT_EQ(to_string(make_rat(6, -4)), "-3/2");
  EXPECT_EQ(to_string(Rat(7)), "7");
  EXPECT_EQ(ipow(make_rat(-2, 3), 3), make_rat(-8, 27));
  EXPECT_EQ(ipow(Rat(5), 0), Rat(1));
}

TEST(Validate, ProjectivePlaneModelIsValid) { EXPECT_TRUE(validate(cp2()).ok()); }

TEST(Validate, TooManyNegativeWeights) {
  auto r = validate(with_weights(cp2(), 1, {-1, -1}));
  ASSERT_FALSE(r.ok());
  bool found = false;
  for (const auto& v : r.violations)
    if (v.rule == Rule::NegativeCount && v.point == 1) {
      EXPECT_EQ(v.message, "negative-weight count at P_1 is 2, expected 1");
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Validate, IndexBoundReportedWhenCountExceedsIndex) {
  auto r = validate(with_weights(cp2(), 0, {-1, 2}));
  bool bound = false;
  for (const auto& v : r.violations) bound |= v.rule == Rule::IndexBound && v.point == 0;
  EXPECT_TRUE(bound);
}

TEST(Validate, RepeatedMomentValue) {
  auto r = validate(with_phi(cp2(), 1, Rat(0)));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations.front().rule, Rule::MomentOrder);
  EXPECT_NE(r.violations.front().message.find("moment values not strictly increasing"), std::string::npos);
}

TEST(Validate, ZeroWeight) {
  auto r = validate(with_weights(cp2(), 1, {-1, 0}));
  bool zero = false;
  for (const auto& v : r.violations)
    if (v.rule == Rule::ZeroWeight) {
      zero = true;
      EXPECT_EQ(v.message, "zero weight at point 1");
    }
  EXPECT_TRUE(zero);
}

TEST(Validate, NonIntegralDifferencesOnlyWhenRequired) {
  auto d = with_phi(cp2(), 1, make_rat(1, 2));
  bool integrality = false;
  for (const auto& v : validate(d).violations) integrality |= v.rule == Rule::MomentIntegrality;
  EXPECT_TRUE(integrality);
  for (const auto& v : validate(d, {.require_integral_differences = false}).violations)
    EXPECT_NE(v.rule, Rule::MomentIntegrality);
}

TEST(Validate, RationalTranslationStaysValid) {
  EXPECT_TRUE(validate(cp2().translated(make_rat(7, 3))).ok());
}

TEST(Structure, ShapeErrors) {
  EXPECT_THROW(FixedPointData(0, {FixedPoint{}}), Error);
  EXPECT_THROW(FixedPointData(2, {FixedPoint{0, 0, {1, 2}}}), Error);
  try {
    FixedPointData(1, {FixedPoint{0, 0, {1}}, FixedPoint{0, 1, {-1, 2}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StructureError);
  }
}

TEST(Structure, PointIndexAndSorting) {
  FixedPointData d(2, {FixedPoint{9, 0, {2, 1}}, FixedPoint{9, 1, {1, -1}}, FixedPoint{9, 2, {-1, -2}}});
  EXPECT_EQ(d.point(1).index, 1);
  EXPECT_EQ(d.point(0).weights, (std::vector<Weight>{1, 2}));
  EXPECT_EQ(d, cp2());
  try {
    d.point(3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
  }
}

TEST(Structure, Normalized) {
  auto d = cp2().translated(Rat(-4));
  EXPECT_EQ(d.point(0).moment_value, Rat(-4));
  EXPECT_EQ(d.normalized(), cp2());
}

TEST(PointQuantities, GammaAndLambdas) {
  EXPECT_EQ(gamma(cp2(), 0), Rat(3));
  EXPECT_EQ(gamma(cp2(), 2), Rat(-3));
  EXPECT_EQ(lambda_minus(cp2(), 0), Rat(1));
  EXPECT_EQ(lambda_plus(cp2(), 2), Rat(1));
  EXPECT_EQ(lambda_all(cp2(), 1), Rat(-1));
  auto q = quadric_model(3, {2, 1});
  EXPECT_EQ(lambda_minus(q, 0), Rat(1));
  EXPECT_EQ(lambda_minus(q, 2), Rat(3));
  EXPECT_EQ(lambda_plus(q, 1), Rat(3));
  EXPECT_EQ(negative_count(q.point(3)), 3);
}
