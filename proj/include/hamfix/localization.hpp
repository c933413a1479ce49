#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hamfix/fixed_point.hpp"

namespace hamfix {

// Restriction of a homogeneous equivariant class of degree 2*degree to the
// fixed points: at P the class restricts to coefficients[P] * t^degree.
struct EquivariantRestriction {
  int degree = 0;
  std::map<int, Rat> coefficients;
};

// Localization sum over the fixed points: sum of a_P / (product of weights at P).
Rat abbv_sum(const FixedPointData& data, const EquivariantRestriction& cls);

// Restriction of c1^a * [omega - phi t]^b, i.e. Gamma_P^a * (-phi_P)^b.
EquivariantRestriction monomial_class(const FixedPointData& data, int a, int b);

struct BatteryReport {
  // (a, b) pairs with a + b < n whose localization sum is nonzero, in lexicographic order.
  std::vector<std::pair<int, int>> failures;
  // Localization sum of [omega - phi t]^n, the symplectic volume.
  Rat volume;

  bool volume_positive() const { return volume > 0; }
  bool passed() const { return failures.empty() && volume_positive(); }
};

// Every class of degree below the top integrates to zero, so all those
// localization sums must vanish. This is a necessary condition only.
BatteryReport vanishing_battery(const FixedPointData& data);

}  // namespace hamfix
