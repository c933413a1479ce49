#include "hamfix/gradient_graph.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace hamfix {

namespace {

bool divides(Weight w, const Rat& gap) {
  if (!is_integer(gap)) return false;
  return boost::multiprecision::numerator(gap) % w == 0;
}

}  // namespace

int GradientSphereGraph::edge_count(int lower, int upper) const {
  return static_cast<int>(
      std::count_if(edges.begin(), edges.end(), [&](const SphereEdge& e) { return e.lower == lower && e.upper == upper; }));
}

GradientSphereGraph gradient_graph(const FixedPointData& data) {
  const int n = data.n();
  const auto& pts = data.points();
  // Remaining multiplicities of each magnitude.
  std::vector<std::map<Weight, int>> neg(pts.size()), pos(pts.size());
  for (const auto& p : pts)
    for (Weight w : p.weights) {
      if (w < 0) ++neg[p.index][-w];
      if (w > 0) ++pos[p.index][w];
    }

  struct Candidate {
    Weight w;
    int lower;
    int upper;
  };
  std::vector<Candidate> candidates;
  for (int upper = 1; upper <= n; ++upper)
    for (const auto& [w, count] : neg[upper])
      for (int lower = 0; lower < upper; ++lower)
        if (pos[lower].count(w) && divides(w, pts[upper].moment_value - pts[lower].moment_value))
          candidates.push_back({w, lower, upper});
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    return std::make_tuple(-a.w, a.upper - a.lower, a.lower, a.upper) <
           std::make_tuple(-b.w, b.upper - b.lower, b.lower, b.upper);
  });

  GradientSphereGraph graph;
  for (const auto& c : candidates) {
    // A candidate can absorb several copies of w, one sphere each.
    while (neg[c.upper][c.w] > 0 && pos[c.lower][c.w] > 0) {
      --neg[c.upper][c.w];
      --pos[c.lower][c.w];
      graph.edges.push_back({c.lower, c.upper, c.w, true});
    }
  }

  for (int upper = 1; upper <= n; ++upper) {
    for (const auto& [w, count] : neg[upper]) {
      for (int k = 0; k < count; ++k) {
        std::vector<int> targets;
        for (int lower = 0; lower < upper; ++lower)
          if (divides(w, pts[upper].moment_value - pts[lower].moment_value)) targets.push_back(lower);
        if (targets.size() == 1)
          graph.edges.push_back({targets.front(), upper, w, false});
        else
          graph.ambiguous.push_back({upper, -w, std::move(targets)});
      }
    }
  }
  for (int lower = 0; lower < n; ++lower) {
    for (const auto& [w, count] : pos[lower]) {
      for (int k = 0; k < count; ++k) {
        std::vector<int> targets;
        for (int upper = lower + 1; upper <= n; ++upper)
          if (divides(w, pts[upper].moment_value - pts[lower].moment_value)) targets.push_back(upper);
        graph.ambiguous.push_back({lower, w, std::move(targets)});
      }
    }
  }

  std::sort(graph.edges.begin(), graph.edges.end(), [](const SphereEdge& a, const SphereEdge& b) {
    return std::make_tuple(a.lower, a.upper, a.w, !a.paired) < std::make_tuple(b.lower, b.upper, b.w, !b.paired);
  });
  for (int lower = 0; lower <= n; ++lower)
    for (int upper = lower + 1; upper <= n; ++upper)
      if (graph.edge_count(lower, upper) == 0) graph.missing.emplace_back(lower, upper);
  return graph;
}

}  // namespace hamfix
