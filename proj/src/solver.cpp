#include "hamfix/solver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "hamfix/error.hpp"
#include "hamfix/localization.hpp"
#include "hamfix/models.hpp"

namespace hamfix {

namespace {

void check_phis(const RingSpec& spec, const std::vector<std::int64_t>& phis) {
  if (phis.size() != static_cast<std::size_t>(spec.n()) + 1)
    throw Error(ErrorKind::SpecMismatch, "ring has n = " + std::to_string(spec.n()) + " but " +
                                             std::to_string(phis.size()) + " moment values were given");
  for (std::size_t i = 1; i < phis.size(); ++i)
    if (phis[i] <= phis[i - 1])
      throw Error(ErrorKind::NonIncreasing, "moment values must be strictly increasing at position " +
                                                std::to_string(i));
}

using Option = std::vector<Weight>;  // option[j] = magnitude of the weight pairing P_i with P_j

std::vector<Weight> divisors_up_to(std::int64_t g, std::int64_t cap) {
  std::vector<Weight> out;
  for (std::int64_t d = 1; d <= g && d <= cap; ++d)
    if (g % d == 0) out.push_back(d);
  return out;
}

// All ways to pick w_j | (phi_i - phi_j), w_j <= cap, with prod_j w_j = target.
std::vector<Option> level_options(int i, const Rat& target, const std::vector<std::int64_t>& phis, std::int64_t cap) {
  std::vector<Option> out;
  if (!is_integer(target) || target == 0) return out;
  // Negative weights multiply to a number of sign (-1)^i.
  const bool negative = target < 0;
  if (negative != (i % 2 == 1)) return out;
  const Int magnitude = boost::multiprecision::abs(boost::multiprecision::numerator(target));

  std::vector<std::vector<Weight>> divs;
  for (int j = 0; j < i; ++j) divs.push_back(divisors_up_to(phis[i] - phis[j], cap));

  Option current(static_cast<std::size_t>(i));
  auto rec = [&](auto&& self, int j, const Int& remaining) -> void {
    if (j == i) {
      if (remaining == 1) out.push_back(current);
      return;
    }
    for (Weight w : divs[j]) {
      if (remaining % w != 0) continue;
      current[j] = w;
      self(self, j + 1, Int(remaining / w));
    }
  };
  rec(rec, 0, magnitude);
  return out;
}

bool passes_filters(const FixedPointData& data, const std::vector<Rat>& minus_targets,
                    const std::vector<Rat>& plus_targets) {
  try {
    if (!validate(data).ok()) return false;
    c1_coefficient(data);
    condition_d_offset(data);
    if (!vanishing_battery(data).passed()) return false;
    for (int i = 0; i <= data.n(); ++i)
      if (lambda_minus(data, i) != minus_targets[i] || lambda_plus(data, i) != plus_targets[i]) return false;
  } catch (const Error&) {
    return false;
  }
  return true;
}

std::vector<Weight> flatten(const FixedPointData& d) {
  std::vector<Weight> out;
  for (const auto& p : d.points()) out.insert(out.end(), p.weights.begin(), p.weights.end());
  return out;
}

class WeightSearch {
 public:
  WeightSearch(const RingSpec& spec, const std::vector<std::int64_t>& phis, const SolveOptions& opts)
      : phis_(phis), opts_(opts), n_(spec.n()) {
    minus_targets_ = lambda_minus_targets(spec, phis);
    plus_targets_ = positive_targets(spec, phis);
    const std::int64_t cap = opts.max_weight.value_or(phis.back() - phis.front());
    options_.resize(static_cast<std::size_t>(n_) + 1);
    for (int i = 1; i <= n_; ++i) options_[i] = level_options(i, minus_targets_[i], phis, cap);
  }

  SolveResult run() {
    SolveResult result;
    const auto& top = options_[n_];
    const unsigned jobs = std::max(1u, std::min<unsigned>(opts_.jobs, static_cast<unsigned>(top.size())));

    std::vector<std::vector<FixedPointData>> found(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    auto worker = [&](unsigned t) {
      try {
        State s(n_);
        for (std::size_t c = t; c < top.size(); c += jobs) descend_with(n_, top[c], s, found[t]);
      } catch (...) {
        errors[t] = std::current_exception();
        abort_.store(true);
      }
    };
    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::jthread> threads;
      for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);

    for (auto& f : found) std::move(f.begin(), f.end(), std::back_inserter(result.systems));
    std::sort(result.systems.begin(), result.systems.end(),
              [](const FixedPointData& a, const FixedPointData& b) { return flatten(a) < flatten(b); });
    result.systems.erase(std::unique(result.systems.begin(), result.systems.end()), result.systems.end());
    result.nodes_visited = nodes_.load();
    return result;
  }

 private:
  struct State {
    explicit State(int n) : pos(static_cast<std::size_t>(n) + 1), neg(static_cast<std::size_t>(n) + 1) {}
    std::vector<std::vector<Weight>> pos;
    std::vector<std::vector<Weight>> neg;
    // Gamma at the topmost completed point, and C once two points are complete.
    std::optional<Rat> anchor_gamma;
    std::optional<Rat> c1;
  };

  void tick() {
    if (abort_.load()) throw Error(ErrorKind::SearchBudgetExceeded, "search aborted");
    if (opts_.stop.stop_requested()) throw Error(ErrorKind::SearchBudgetExceeded, "search cancelled");
    if (nodes_.fetch_add(1) + 1 > opts_.budget)
      throw Error(ErrorKind::SearchBudgetExceeded, "node budget of " + std::to_string(opts_.budget) + " exhausted");
  }

  Rat gamma_of(const State& s, int k) const {
    Rat g = 0;
    for (Weight w : s.pos[k]) g += w;
    for (Weight w : s.neg[k]) g -= w;
    return g;
  }

  // Gamma_k must lie on the line Gamma = -C phi + d fixed by the points above.
  // Returns false on a contradiction; `set` records what was newly fixed.
  bool accept_point(int k, State& s, int& set) const {
    const Rat g = gamma_of(s, k);
    if (!s.anchor_gamma) {
      s.anchor_gamma = g;
      set = 1;
      return true;
    }
    const Rat gap = Rat(phis_[n_] - phis_[k]);
    if (!s.c1) {
      const Rat c = (g - *s.anchor_gamma) / gap;
      if (c <= 0) return false;
      s.c1 = c;
      set = 2;
      return true;
    }
    set = 0;
    return g == *s.anchor_gamma + *s.c1 * gap;
  }

  void undo(State& s, int set) const {
    if (set == 1) s.anchor_gamma.reset();
    if (set == 2) s.c1.reset();
  }

  bool positive_target_met(const State& s, int j) const {
    Rat prod = 1;
    for (Weight w : s.pos[j]) prod *= w;
    return prod == plus_targets_[j];
  }

  void descend_with(int level, const Option& opt, State& s, std::vector<FixedPointData>& out) {
    tick();
    s.neg[level] = opt;
    for (int j = 0; j < level; ++j) s.pos[j].push_back(opt[j]);

    int set_k = 0;
    int set_0 = 0;
    bool ok = accept_point(level, s, set_k) && positive_target_met(s, level - 1);
    bool bottom_ok = false;
    if (ok && level == 1) {
      bottom_ok = accept_point(0, s, set_0);
      if (bottom_ok) emit(s, out);
      undo(s, set_0);
    } else if (ok) {
      for (const auto& next : options_[level - 1]) descend_with(level - 1, next, s, out);
    }
    undo(s, set_k);

    for (int j = 0; j < level; ++j) s.pos[j].pop_back();
    s.neg[level].clear();
  }

  void emit(const State& s, std::vector<FixedPointData>& out) const {
    std::vector<FixedPoint> pts(static_cast<std::size_t>(n_) + 1);
    for (int k = 0; k <= n_; ++k) {
      pts[k].moment_value = Rat(phis_[k]);
      for (Weight w : s.neg[k]) pts[k].weights.push_back(-w);
      for (Weight w : s.pos[k]) pts[k].weights.push_back(w);
    }
    FixedPointData data(n_, std::move(pts));
    if (passes_filters(data, minus_targets_, plus_targets_)) out.push_back(std::move(data));
  }

  const std::vector<std::int64_t>& phis_;
  const SolveOptions& opts_;
  int n_;
  std::vector<Rat> minus_targets_;
  std::vector<Rat> plus_targets_;
  std::vector<std::vector<Option>> options_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> abort_{false};
};

}  // namespace

std::vector<Rat> lambda_minus_targets(const RingSpec& spec, const std::vector<std::int64_t>& phis) {
  check_phis(spec, phis);
  std::vector<Rat> out;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    Rat t = spec.coefficient(static_cast<int>(i));
    for (std::size_t j = 0; j < i; ++j) t *= phis[j] - phis[i];
    out.push_back(t);
  }
  return out;
}

std::vector<Rat> positive_targets(const RingSpec& spec, const std::vector<std::int64_t>& phis) {
  check_phis(spec, phis);
  const int n = spec.n();
  std::vector<Rat> out;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    Rat t = spec.coefficient(n - static_cast<int>(i));
    for (std::size_t j = i + 1; j < phis.size(); ++j) t *= phis[j] - phis[i];
    out.push_back(t);
  }
  return out;
}

SolveResult enumerate_weight_systems(const RingSpec& spec, const std::vector<std::int64_t>& phis,
                                     const SolveOptions& opts) {
  WeightSearch search(spec, phis, opts);
  SolveResult result = search.run();
  result.uniqueness_claimed = spec.kind() != RingKind::Other;
  return result;
}

bool EquivalenceReport::passed() const {
  return !lines.empty() && std::all_of(lines.begin(), lines.end(), [](const auto& l) { return l.passed; });
}

EquivalenceReport verify_equivalence(const RingSpec& spec, const std::vector<std::int64_t>& phis,
                                     const SolveOptions& opts) {
  if (spec.kind() == RingKind::Other)
    throw Error(ErrorKind::InvalidInput, "equivalence is only defined for projective space and quadric rings");
  const bool projective = spec.kind() == RingKind::ProjectiveSpace;
  const int n = spec.n();

  EquivalenceReport report;
  report.systems = enumerate_weight_systems(spec, phis, opts).systems;

  std::optional<FixedPointData> standard;
  std::string standard_error;
  try {
    standard = projective ? expected_weights_cpn(phis) : expected_weights_quadric(phis);
  } catch (const Error& e) {
    standard_error = e.what();
  }

  {
    ImplicationResult line{"(2)=>(4)", false, ""};
    const auto count = report.systems.size();
    line.detail = std::to_string(count) + (count == 1 ? " system found" : " systems found");
    if (!standard) {
      line.detail += "; no standard weights: " + standard_error;
    } else if (count == 1 && report.systems.front() == *standard) {
      line.passed = true;
      line.detail += ", equal to the standard model";
    } else if (count == 1) {
      line.detail += ", differs from the standard model";
    }
    report.lines.push_back(std::move(line));
  }

  // The remaining implications start from the standard weights.
  auto guarded = [&](std::string name, auto&& body) {
    ImplicationResult line{std::move(name), false, ""};
    if (!standard) {
      line.detail = "no standard weights: " + standard_error;
    } else {
      try {
        body(*standard, line);
      } catch (const Error& e) {
        line.detail = e.what();
      }
    }
    report.lines.push_back(std::move(line));
  };

  guarded("(4)=>(2)", [&](const FixedPointData& d, ImplicationResult& line) {
    const auto rc = ring_coefficients(d);
    const auto kind = classify_ring(rc).kind();
    line.passed = kind == spec.kind();
    line.detail = "ring classifies as " + to_string(kind);
  });
  guarded("(4)=>(3)", [&](const FixedPointData& d, ImplicationResult& line) {
    const auto chern = chern_coefficients(d);
    const auto expected = projective ? projective_space_chern(n) : quadric_chern(n);
    line.passed = chern.total == expected;
    line.detail = "c =";
    for (std::size_t k = 0; k < chern.total.size(); ++k) line.detail += " " + to_string(chern.total[k]);
  });
  guarded("(4)=>(1)", [&](const FixedPointData& d, ImplicationResult& line) {
    const Rat c = c1_coefficient(d);
    line.passed = c == (projective ? n + 1 : n);
    line.detail = "C = " + to_string(c);
  });
  return report;
}

std::vector<Rat> MomentInference::moment_values() const {
  std::vector<Rat> out;
  for (const auto& p : data.points()) out.push_back(p.moment_value);
  return out;
}

MomentInference infer_moment_values(const std::vector<std::vector<Weight>>& weights_only) {
  if (weights_only.size() < 2) throw Error(ErrorKind::StructureError, "need at least two fixed points");
  const int n = static_cast<int>(weights_only.size()) - 1;

  std::vector<Rat> g;
  for (const auto& ws : weights_only) {
    if (ws.size() != static_cast<std::size_t>(n))
      throw Error(ErrorKind::StructureError, "every fixed point needs " + std::to_string(n) + " weights");
    g.push_back(Rat(std::accumulate(ws.begin(), ws.end(), std::int64_t{0})));
  }

  std::vector<int> order(weights_only.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g[a] > g[b]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (g[order[i]] == g[order[i - 1]])
      throw Error(ErrorKind::InconsistentGamma, "two fixed points share Gamma = " + to_string(g[order[i]]));

  std::vector<FixedPoint> pts;
  for (int idx : order) pts.push_back({0, Rat(0), weights_only[idx]});
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const int neg = negative_count(pts[i]);
    if (neg != static_cast<int>(i))
      throw Error(ErrorKind::InconsistentGamma, "after ordering by Gamma, point " + std::to_string(i) + " has " +
                                                    std::to_string(neg) + " negative weights");
  }
  FixedPointData unscaled(n, pts);

  const Rat lm1 = lambda_minus(unscaled, 1);
  const Rat c = (g[order[0]] - g[order[1]]) / -lm1;
  if (c <= 0) throw Error(ErrorKind::NoPositiveScale, "scale C = " + to_string(c) + " is not positive");
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i].moment_value = (g[order[0]] - g[order[i]]) / c;

  MomentInference out{FixedPointData(n, std::move(pts)), std::move(order), c, {}};
  out.ring = ring_coefficients(out.data);
  return out;
}

}  // namespace hamfix
