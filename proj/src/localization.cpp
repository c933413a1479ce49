#include "hamfix/localization.hpp"

#include "hamfix/error.hpp"

namespace hamfix {

Rat abbv_sum(const FixedPointData& data, const EquivariantRestriction& cls) {
  Rat sum = 0;
  for (const auto& p : data.points()) {
    auto it = cls.coefficients.find(p.index);
    if (it == cls.coefficients.end())
      throw Error(ErrorKind::MissingRestriction, "no restriction given at point " + std::to_string(p.index));
    if (it->second == 0) continue;
    Rat denom = lambda_all(data, p.index);
    if (denom == 0) throw Error(ErrorKind::InvalidInput, "zero weight at point " + std::to_string(p.index));
    sum += it->second / denom;
  }
  return sum;
}

EquivariantRestriction monomial_class(const FixedPointData& data, int a, int b) {
  EquivariantRestriction cls;
  cls.degree = a + b;
  for (const auto& p : data.points())
    cls.coefficients[p.index] =
        ipow(gamma(data, p.index), static_cast<unsigned>(a)) * ipow(-p.moment_value, static_cast<unsigned>(b));
  return cls;
}

BatteryReport vanishing_battery(const FixedPointData& data) {
  BatteryReport report;
  const int n = data.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; a + b < n; ++b)
      if (abbv_sum(data, monomial_class(data, a, b)) != 0) report.failures.emplace_back(a, b);
  report.volume = abbv_sum(data, monomial_class(data, 0, n));
  return report;
}

}  // namespace hamfix
