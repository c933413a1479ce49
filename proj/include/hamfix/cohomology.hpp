#pragma once

#include <vector>

#include "hamfix/fixed_point.hpp"
#include "hamfix/ring_spec.hpp"

namespace hamfix {

/// Ratios r_i with alpha_i = r_i * x^i, where alpha_i generates H^{2i}(M; Z)
/// and x = alpha_1 = [omega]. r[0] = r[1] = 1.
struct RingCoefficients {
  std::vector<Rat> r;

  int n() const { return static_cast<int>(r.size()) - 1; }
};

/// Chern data read off the fixed points.
///
/// sigma[i][k] is the k-th elementary symmetric function of the weights at P_i,
/// i.e. the coefficient of t^k in the restriction of c_k^{S^1}(M) to P_i.
/// total[k] is gamma_k with c_k(M) = gamma_k * x^k; total[0] = 1.
struct ChernData {
  std::vector<std::vector<Int>> sigma;
  std::vector<Rat> total;

  int n() const { return static_cast<int>(total.size()) - 1; }
  const Rat& gamma(int k) const { return total.at(static_cast<std::size_t>(k)); }
};

/// The constant C with c_1(M) = C [omega], from the pairwise quotients
/// (Gamma_i - Gamma_j) / (phi_j - phi_i). Every pair must agree and C > 0.
Rat c1_coefficient(const FixedPointData& data);

/// The constant d with Gamma_i = C * (-phi_i) + d at every fixed point.
Rat condition_d_offset(const FixedPointData& data);

/// Ring ratios from the weights alone:
///   r_i = Lambda_i^- / (Lambda_1^-)^i * (Gamma_1 - Gamma_0)^i / prod_{j<i} (Gamma_i - Gamma_j).
RingCoefficients ring_coefficients(const FixedPointData& data);

/// Chern coefficients in the x basis. Evaluated through the Lambda^+ expression
/// and cross-checked against the Lambda^- expression.
ChernData chern_coefficients(const FixedPointData& data);

RingSpec classify_ring(const RingCoefficients& rc);

/// Elementary symmetric functions sigma_0..sigma_m of the given integers.
std::vector<Int> elementary_symmetric(const std::vector<Weight>& values);

/// Total Chern class of CP^n in powers of the hyperplane class: binomial(n+1, k).
std::vector<Rat> projective_space_chern(int n);

/// Total Chern class of the n-dimensional quadric, (1+x)^{n+2} / (1+2x)
/// truncated at degree n.
std::vector<Rat> quadric_chern(int n);

}  // namespace hamfix
