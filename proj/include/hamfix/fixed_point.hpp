#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamfix/rational.hpp"

namespace hamfix {

using Weight = std::int64_t;

// One isolated fixed point: its position in moment order, its moment value and
// the weights of the isotropy representation (kept sorted ascending).
struct FixedPoint {
  int index = 0;
  Rat moment_value;
  std::vector<Weight> weights;

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

// Fixed point data of a 2n-dimensional Hamiltonian circle manifold with n+1
// isolated fixed points. Construction only checks shape (n >= 1, n+1 points,
// n weights each); the consistency rules live in validate().
class FixedPointData {
 public:
  FixedPointData(int n, std::vector<FixedPoint> points);

  int n() const { return n_; }
  const std::vector<FixedPoint>& points() const { return points_; }
  const FixedPoint& point(int i) const;

  // Same weights, every moment value shifted by `shift`.
  FixedPointData translated(const Rat& shift) const;
  // Translate so that the first moment value is 0.
  FixedPointData normalized() const;

  friend bool operator==(const FixedPointData&, const FixedPointData&) = default;

 private:
  int n_;
  std::vector<FixedPoint> points_;
};

enum class Rule {
  MomentOrder,
  MomentIntegrality,
  ZeroWeight,
  NegativeCount,
  IndexBound,
};

struct Violation {
  Rule rule;
  int point;  // -1 when the rule concerns the whole datum
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

struct ValidationOptions {
  bool require_integral_differences = true;
};

ValidationReport validate(const FixedPointData& data, ValidationOptions opts = {});

// Sum of the weights at P_i.
Rat gamma(const FixedPointData& data, int i);
// Product of all weights at P_i.
Rat lambda_all(const FixedPointData& data, int i);
// Product of the negative weights at P_i (1 when there are none).
Rat lambda_minus(const FixedPointData& data, int i);
// Product of the positive weights at P_i (1 when there are none).
Rat lambda_plus(const FixedPointData& data, int i);

int negative_count(const FixedPoint& p);

}  // namespace hamfix
