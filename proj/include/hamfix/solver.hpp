#pragma once

#include <cstdint>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "hamfix/cohomology.hpp"
#include "hamfix/fixed_point.hpp"
#include "hamfix/ring_spec.hpp"

namespace hamfix {

// Product of the negative weights at each P_i forced by the ring:
// r_i * prod_{j<i} (phi_j - phi_i).
std::vector<Rat> lambda_minus_targets(const RingSpec& spec, const std::vector<std::int64_t>& phis);

// Product of the positive weights at each P_i, the mirror image under phi -> -phi:
// r_{n-i} * prod_{j>i} (phi_j - phi_i).
std::vector<Rat> positive_targets(const RingSpec& spec, const std::vector<std::int64_t>& phis);

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

struct SolveOptions {
  // Largest weight magnitude tried; defaults to the largest moment gap.
  std::optional<std::int64_t> max_weight;
  // Maximum number of search nodes (partial assignments) visited.
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
  std::stop_token stop;
};

struct SolveResult {
  // Canonically sorted, deduplicated.
  std::vector<FixedPointData> systems;
  // False for Other rings, where the paired-sphere ansatz is not known to hold
  // and an empty or singleton answer says nothing about uniqueness.
  bool uniqueness_claimed = true;
  std::uint64_t nodes_visited = 0;
};

// All fixed point data at the given moment values in which every negative
// weight -w at P_i pairs with a weight +w at a distinct lower P_j, w divides
// phi_i - phi_j, and the negative and positive products hit the ring targets.
// Survivors are filtered through validate, c1 and condition D constancy, the
// vanishing battery and the positive targets.
//
// Throws SearchBudgetExceeded when the node budget runs out or opts.stop fires.
SolveResult enumerate_weight_systems(const RingSpec& spec, const std::vector<std::int64_t>& phis,
                                     const SolveOptions& opts = {});

struct ImplicationResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct EquivalenceReport {
  std::vector<FixedPointData> systems;
  std::vector<ImplicationResult> lines;

  bool passed() const;
};

// Checks, for a projective space or quadric ring, that the ring determines the
// weights uniquely and that the standard weights give back the ring, the total
// Chern class and c_1. One named line per implication.
EquivalenceReport verify_equivalence(const RingSpec& spec, const std::vector<std::int64_t>& phis,
                                     const SolveOptions& opts = {});

struct MomentInference {
  // The weight systems reordered by decreasing Gamma, with the inferred moment values.
  FixedPointData data;
  // order[i] is the input position of the point placed at P_i.
  std::vector<int> order;
  Rat c1;
  RingCoefficients ring;

  std::vector<Rat> moment_values() const;
};

// Recovers moment values (phi_0 = 0) from weights alone. The ordering comes from
// Gamma_i = -C phi_i + d; the scale from alpha_1 = [omega], which forces
// phi_1 - phi_0 = -Lambda_1^-.
MomentInference infer_moment_values(const std::vector<std::vector<Weight>>& weights_only);

}  // namespace hamfix
