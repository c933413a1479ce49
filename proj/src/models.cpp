#include "hamfix/models.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "hamfix/error.hpp"

namespace hamfix {

namespace {

void require_increasing(const std::vector<std::int64_t>& phis) {
  if (phis.size() < 2) throw Error(ErrorKind::InvalidInput, "need at least two moment values");
  for (std::size_t i = 1; i < phis.size(); ++i)
    if (phis[i] <= phis[i - 1])
      throw Error(ErrorKind::NonIncreasing, "moment values must be strictly increasing at position " +
                                                std::to_string(i));
}

}  // namespace

FixedPointData cpn_model(std::vector<std::int64_t> b) {
  if (b.size() < 2) throw Error(ErrorKind::InvalidInput, "cpn model needs at least two exponents");
  std::sort(b.begin(), b.end());
  if (std::adjacent_find(b.begin(), b.end()) != b.end())
    throw Error(ErrorKind::DuplicateB, "exponents must be pairwise distinct");
  return expected_weights_cpn(b);
}

FixedPointData quadric_model(int n, std::vector<std::int64_t> b) {
  if (n % 2 == 0) throw Error(ErrorKind::EvenN, "quadric model needs odd n, got " + std::to_string(n));
  if (n < 3) throw Error(ErrorKind::InvalidInput, "quadric model needs n >= 3, got " + std::to_string(n));
  const auto half = static_cast<std::size_t>((n + 1) / 2);
  if (b.size() != half)
    throw Error(ErrorKind::InvalidInput, "quadric model with n = " + std::to_string(n) + " needs " +
                                             std::to_string(half) + " exponents, got " + std::to_string(b.size()));
  for (auto& v : b) {
    if (v == 0) throw Error(ErrorKind::ZeroB, "exponents must be nonzero");
    v = std::abs(v);
  }
  std::sort(b.begin(), b.end(), std::greater<>());
  if (std::adjacent_find(b.begin(), b.end()) != b.end())
    throw Error(ErrorKind::DuplicateAbsB, "exponents must have pairwise distinct absolute values");

  std::vector<FixedPoint> pts(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < half; ++i) {
    auto& low = pts[i];
    auto& high = pts[static_cast<std::size_t>(n) - i];
    low.moment_value = Rat(-b[i]);
    high.moment_value = Rat(b[i]);
    for (std::size_t j = 0; j < half; ++j) {
      if (j == i) continue;
      low.weights.push_back(b[j] + b[i]);
      low.weights.push_back(-b[j] + b[i]);
      high.weights.push_back(b[j] - b[i]);
      high.weights.push_back(-b[j] - b[i]);
    }
    low.weights.push_back(b[i]);
    high.weights.push_back(-b[i]);
  }
  return FixedPointData(n, std::move(pts));
}

FixedPointData expected_weights_cpn(const std::vector<std::int64_t>& phis) {
  require_increasing(phis);
  const int n = static_cast<int>(phis.size()) - 1;
  std::vector<FixedPoint> pts(phis.size());
  for (std::size_t i = 0; i < phis.size(); ++i) {
    pts[i].moment_value = Rat(phis[i]);
    for (std::size_t j = 0; j < phis.size(); ++j)
      if (j != i) pts[i].weights.push_back(phis[j] - phis[i]);
  }
  return FixedPointData(n, std::move(pts));
}

FixedPointData expected_weights_quadric(const std::vector<std::int64_t>& phis) {
  require_increasing(phis);
  const int n = static_cast<int>(phis.size()) - 1;
  if (n % 2 == 0) throw Error(ErrorKind::EvenN, "quadric weights need odd n, got " + std::to_string(n));
  std::vector<FixedPoint> pts(phis.size());
  for (std::size_t i = 0; i < phis.size(); ++i) {
    const std::size_t opposite = static_cast<std::size_t>(n) - i;
    const std::int64_t span = phis[opposite] - phis[i];
    if (span % 2 != 0)
      throw Error(ErrorKind::OddHalfWeight, "(phi_" + std::to_string(opposite) + " - phi_" + std::to_string(i) +
                                                ")/2 = " + std::to_string(span) + "/2 is not an integer");
    pts[i].moment_value = Rat(phis[i]);
    for (std::size_t j = 0; j < phis.size(); ++j)
      if (j != i && j != opposite) pts[i].weights.push_back(phis[j] - phis[i]);
    pts[i].weights.push_back(span / 2);
  }
  return FixedPointData(n, std::move(pts));
}

}  // namespace hamfix
