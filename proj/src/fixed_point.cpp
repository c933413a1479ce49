#include "hamfix/fixed_point.hpp"

#include <algorithm>
#include <sstream>

#include "hamfix/error.hpp"

namespace hamfix {

FixedPointData::FixedPointData(int n, std::vector<FixedPoint> points) : n_(n), points_(std::move(points)) {
  if (n_ < 1) throw Error(ErrorKind::StructureError, "n must be at least 1, got " + std::to_string(n_));
  if (points_.size() != static_cast<std::size_t>(n_) + 1)
    throw Error(ErrorKind::StructureError, "expected " + std::to_string(n_ + 1) + " fixed points, got " +
                                               std::to_string(points_.size()));
  for (std::size_t i = 0; i < points_.size(); ++i) {
    auto& p = points_[i];
    if (p.weights.size() != static_cast<std::size_t>(n_))
      throw Error(ErrorKind::StructureError, "point " + std::to_string(i) + " has " +
                                                 std::to_string(p.weights.size()) + " weights, expected " +
                                                 std::to_string(n_));
    p.index = static_cast<int>(i);
    std::sort(p.weights.begin(), p.weights.end());
  }
}

const FixedPoint& FixedPointData::point(int i) const {
  if (i < 0 || i > n_)
    throw Error(ErrorKind::IndexOutOfRange, "point index " + std::to_string(i) + " outside [0, " +
                                                std::to_string(n_) + "]");
  return points_[static_cast<std::size_t>(i)];
}

FixedPointData FixedPointData::translated(const Rat& shift) const {
  auto pts = points_;
  for (auto& p : pts) p.moment_value += shift;
  return FixedPointData(n_, std::move(pts));
}

FixedPointData FixedPointData::normalized() const { return translated(-points_.front().moment_value); }

int negative_count(const FixedPoint& p) {
  return static_cast<int>(std::count_if(p.weights.begin(), p.weights.end(), [](Weight w) { return w < 0; }));
}

ValidationReport validate(const FixedPointData& data, ValidationOptions opts) {
  ValidationReport report;
  const auto& pts = data.points();
  auto add = [&](Rule rule, int point, std::string msg) { report.violations.push_back({rule, point, std::move(msg)}); };

  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].moment_value <= pts[i - 1].moment_value) {
      std::ostringstream os;
      os << "moment values not strictly increasing: phi(P_" << i - 1 << ") = " << to_string(pts[i - 1].moment_value)
         << " >= phi(P_" << i << ") = " << to_string(pts[i].moment_value);
      add(Rule::MomentOrder, static_cast<int>(i), os.str());
    }
  }

  if (opts.require_integral_differences) {
    // Integral differences to P_0 imply integral differences between every pair.
    for (std::size_t i = 1; i < pts.size(); ++i) {
      Rat diff = pts[i].moment_value - pts[0].moment_value;
      if (!is_integer(diff)) {
        std::ostringstream os;
        os << "moment value difference phi(P_" << i << ") - phi(P_0) = " << to_string(diff) << " is not an integer";
        add(Rule::MomentIntegrality, static_cast<int>(i), os.str());
      }
    }
  }

  for (const auto& p : pts) {
    if (std::find(p.weights.begin(), p.weights.end(), Weight{0}) != p.weights.end())
      add(Rule::ZeroWeight, p.index, "zero weight at point " + std::to_string(p.index));
  }

  for (const auto& p : pts) {
    int neg = negative_count(p);
    if (neg != p.index) {
      std::ostringstream os;
      os << "negative-weight count at P_" << p.index << " is " << neg << ", expected " << p.index;
      add(Rule::NegativeCount, p.index, os.str());
    }
    // Isolated-point form of the index bound: 2*lambda <= sum over the i lower points of 2.
    if (neg > p.index) {
      std::ostringstream os;
      os << "index bound violated at P_" << p.index << ": Morse index " << 2 * neg << " exceeds " << 2 * p.index;
      add(Rule::IndexBound, p.index, os.str());
    }
  }
  return report;
}

Rat gamma(const FixedPointData& data, int i) {
  Rat sum = 0;
  for (Weight w : data.point(i).weights) sum += w;
  return sum;
}

Rat lambda_all(const FixedPointData& data, int i) {
  Rat prod = 1;
  for (Weight w : data.point(i).weights) prod *= w;
  return prod;
}

Rat lambda_minus(const FixedPointData& data, int i) {
  Rat prod = 1;
  for (Weight w : data.point(i).weights)
    if (w < 0) prod *= w;
  return prod;
}

Rat lambda_plus(const FixedPointData& data, int i) {
  Rat prod = 1;
  for (Weight w : data.point(i).weights)
    if (w > 0) prod *= w;
  return prod;
}

}  // namespace hamfix
