#pragma once

#include <cstdint>
#include <vector>

#include "hamfix/fixed_point.hpp"

namespace hamfix {

// Standard circle action on CP^n with exponents b (pairwise distinct). The b
// are sorted ascending; P_i has moment value b_i and weights {b_j - b_i}_{j != i}.
FixedPointData cpn_model(std::vector<std::int64_t> b);

// Standard circle action on the quadric of complex dimension n (odd, >= 3),
// with (n+1)/2 nonzero exponents of pairwise distinct absolute value. Signs are
// absorbed and b is put in decreasing order b_0 > ... > b_{(n-1)/2} > 0; then
// P_i has moment value -b_i and P_{n-i} has moment value b_i.
FixedPointData quadric_model(int n, std::vector<std::int64_t> b);

// Weights {phi_j - phi_i}_{j != i} at moment values phis.
FixedPointData expected_weights_cpn(const std::vector<std::int64_t>& phis);

// Weights {phi_j - phi_i}_{j != i, n-i} plus the half weight (phi_{n-i} - phi_i)/2.
FixedPointData expected_weights_quadric(const std::vector<std::int64_t>& phis);

}  // namespace hamfix
