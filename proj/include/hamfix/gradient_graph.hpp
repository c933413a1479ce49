#pragma once

#include <utility>
#include <vector>

#include "hamfix/fixed_point.hpp"

namespace hamfix {

// A weight gradient sphere with lower pole P_lower and upper pole P_upper
// (lower < upper): -w is a weight at P_upper, and when paired, +w is a weight
// at P_lower. w always divides phi(P_upper) - phi(P_lower).
struct SphereEdge {
  int lower;
  int upper;
  Weight w;
  bool paired;

  friend bool operator==(const SphereEdge&, const SphereEdge&) = default;
};

// A weight left over after pairing, with every point it could reach by divisibility.
struct UnresolvedWeight {
  int point;
  Weight weight;  // signed, as it appears at the point
  std::vector<int> candidates;

  friend bool operator==(const UnresolvedWeight&, const UnresolvedWeight&) = default;
};

struct GradientSphereGraph {
  std::vector<SphereEdge> edges;
  // Leftover negative weights with zero or several feasible lower poles, and
  // every leftover positive weight.
  std::vector<UnresolvedWeight> ambiguous;
  // Pairs (lower, upper) joined by no edge at all.
  std::vector<std::pair<int, int>> missing;

  int edge_count(int lower, int upper) const;
};

// Greedy pairing of negative weights at upper points with equal positive
// weights at lower points, largest w first, then shortest index span, then
// lexicographic (lower, upper).
GradientSphereGraph gradient_graph(const FixedPointData& data);

}  // namespace hamfix
