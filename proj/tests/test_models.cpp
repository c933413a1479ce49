#include <gtest/gtest.h>

#include "hamfix/error.hpp"
#include "hamfix/models.hpp"

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

std::vector<Weight> weights_at(const FixedPointData& d, int i) { return d.point(i).weights; }

}  // namespace

TEST(CpnModel, ProjectivePlane) {
  auto d = cpn_model({0, 1, 2});
  EXPECT_EQ(d.n(), 2);
  EXPECT_EQ(d.point(1).moment_value, Rat(1));
  EXPECT_EQ(weights_at(d, 0), (std::vector<Weight>{1, 2}));
  EXPECT_EQ(weights_at(d, 1), (std::vector<Weight>{-1, 1}));
  EXPECT_EQ(weights_at(d, 2), (std::vector<Weight>{-2, -1}));
}

TEST(CpnModel, SphereAndUnsortedInput) {
  auto d = cpn_model({1, 0});
  EXPECT_EQ(weights_at(d, 0), (std::vector<Weight>{1}));
  EXPECT_EQ(weights_at(d, 1), (std::vector<Weight>{-1}));
  EXPECT_EQ(d.point(0).moment_value, Rat(0));
}

TEST(CpnModel, Errors) {
  EXPECT_EQ(kind_of([] { cpn_model({0, 0, 1}); }), ErrorKind::DuplicateB);
  EXPECT_EQ(kind_of([] { cpn_model({3}); }), ErrorKind::InvalidInput);
}

TEST(QuadricModel, ThreeDimensional) {
  auto d = quadric_model(3, {2, 1});
  std::vector<Rat> phis;
  for (const auto& p : d.points()) phis.push_back(p.moment_value);
  EXPECT_EQ(phis, (std::vector<Rat>{-2, -1, 1, 2}));
  EXPECT_EQ(weights_at(d, 0), (std::vector<Weight>{1, 2, 3}));
  EXPECT_EQ(weights_at(d, 1), (std::vector<Weight>{-1, 1, 3}));
  EXPECT_EQ(weights_at(d, 2), (std::vector<Weight>{-3, -1, 1}));
  EXPECT_EQ(weights_at(d, 3), (std::vector<Weight>{-3, -2, -1}));
}

TEST(QuadricModel, SignsAndOrderAbsorbed) {
  EXPECT_EQ(quadric_model(3, {-1, 2}), quadric_model(3, {2, 1}));
}

TEST(QuadricModel, Errors) {
  EXPECT_EQ(kind_of([] { quadric_model(3, {2, 0}); }), ErrorKind::ZeroB);
  EXPECT_EQ(kind_of([] { quadric_model(4, {2, 1}); }), ErrorKind::EvenN);
  EXPECT_EQ(kind_of([] { quadric_model(3, {2, -2}); }), ErrorKind::DuplicateAbsB);
  EXPECT_EQ(kind_of([] { quadric_model(5, {2, 1}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { quadric_model(1, {1}); }), ErrorKind::InvalidInput);
}

TEST(ExpectedWeights, Cpn) {
  EXPECT_EQ(expected_weights_cpn({0, 1, 2}), cpn_model({0, 1, 2}));
  EXPECT_EQ(weights_at(expected_weights_cpn({0, 2, 5}), 1), (std::vector<Weight>{-2, 3}));
  EXPECT_EQ(kind_of([] { expected_weights_cpn({1, 1, 2}); }), ErrorKind::NonIncreasing);
}

TEST(ExpectedWeights, Quadric) {
  EXPECT_EQ(expected_weights_quadric({-2, -1, 1, 2}), quadric_model(3, {2, 1}));
  EXPECT_EQ(kind_of([] { expected_weights_quadric({-2, -1, 1, 3}); }), ErrorKind::OddHalfWeight);
  EXPECT_EQ(weights_at(expected_weights_quadric({-4, -1, 1, 4}), 1), (std::vector<Weight>{-3, 1, 5}));
  EXPECT_EQ(kind_of([] { expected_weights_quadric({0, 1, 2}); }), ErrorKind::EvenN);
  EXPECT_EQ(kind_of([] { expected_weights_quadric({0, 2, 1, 4}); }), ErrorKind::NonIncreasing);
}
