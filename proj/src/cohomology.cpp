#include "hamfix/cohomology.hpp"

#include <optional>

#include "hamfix/error.hpp"

namespace hamfix {

namespace {

std::vector<Rat> gammas(const FixedPointData& data) {
  std::vector<Rat> g;
  for (int i = 0; i <= data.n(); ++i) g.push_back(gamma(data, i));
  return g;
}

void require_distinct(const std::vector<Rat>& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g[i] == g[j])
        throw Error(ErrorKind::DegenerateGamma, "Gamma_" + std::to_string(i) + " = Gamma_" + std::to_string(j) +
                                                    " = " + to_string(g[i]));
}

void require_nonzero_weights(const FixedPointData& data) {
  for (const auto& p : data.points())
    for (Weight w : p.weights)
      if (w == 0) throw Error(ErrorKind::InvalidInput, "zero weight at point " + std::to_string(p.index));
}

}  // namespace

Rat c1_coefficient(const FixedPointData& data) {
  const auto g = gammas(data);
  const auto& pts = data.points();
  std::optional<Rat> common;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      Rat gap = pts[j].moment_value - pts[i].moment_value;
      if (gap == 0)
        throw Error(ErrorKind::InvalidInput, "points " + std::to_string(i) + " and " + std::to_string(j) +
                                                 " share a moment value");
      Rat q = (g[i] - g[j]) / gap;
      if (!common) {
        common = q;
      } else if (*common != q) {
        throw Error(ErrorKind::NonConstantC1, "pair (" + std::to_string(i) + "," + std::to_string(j) + ") gives " +
                                                  to_string(q) + " but an earlier pair gives " + to_string(*common));
      }
    }
  }
  if (*common <= 0) throw Error(ErrorKind::NonPositiveC1, "c1 coefficient is " + to_string(*common));
  return *common;
}

Rat condition_d_offset(const FixedPointData& data) {
  const Rat c = c1_coefficient(data);
  std::optional<Rat> d;
  for (const auto& p : data.points()) {
    Rat di = gamma(data, p.index) + c * p.moment_value;
    if (!d) {
      d = di;
    } else if (*d != di) {
      throw Error(ErrorKind::ConditionDViolated, "Gamma_" + std::to_string(p.index) + " + C phi_" +
                                                     std::to_string(p.index) + " = " + to_string(di) + ", expected " +
                                                     to_string(*d));
    }
  }
  return *d;
}

RingCoefficients ring_coefficients(const FixedPointData& data) {
  const auto g = gammas(data);
  require_distinct(g);
  const int n = data.n();
  const Rat lm1 = lambda_minus(data, 1);
  RingCoefficients rc;
  rc.r.assign(static_cast<std::size_t>(n) + 1, Rat(1));
  for (int i = 2; i <= n; ++i) {
    Rat denom = 1;
    for (int j = 0; j < i; ++j) denom *= g[i] - g[j];
    const auto ui = static_cast<unsigned>(i);
    rc.r[i] = lambda_minus(data, i) / ipow(lm1, ui) * ipow(g[1] - g[0], ui) / denom;
  }
  return rc;
}

std::vector<Int> elementary_symmetric(const std::vector<Weight>& values) {
  std::vector<Int> e(values.size() + 1, Int(0));
  e[0] = 1;
  for (std::size_t m = 0; m < values.size(); ++m)
    for (std::size_t k = m + 1; k >= 1; --k) e[k] += e[k - 1] * values[m];
  return e;
}

ChernData chern_coefficients(const FixedPointData& data) {
  require_nonzero_weights(data);
  const auto g = gammas(data);
  require_distinct(g);
  const int n = data.n();
  const auto rc = ring_coefficients(data);

  ChernData out;
  for (const auto& p : data.points()) out.sigma.push_back(elementary_symmetric(p.weights));
  std::vector<Rat> lam;
  for (int k = 0; k <= n; ++k) lam.push_back(lambda_all(data, k));

  out.total.assign(static_cast<std::size_t>(n) + 1, Rat(0));
  out.total[0] = 1;
  for (int i = 1; i <= n; ++i) {
    // Lambda^+ form.
    Rat upper = 1;
    for (int j = i + 1; j <= n; ++j) upper *= g[i] - g[j];
    Rat plus_sum = 0;
    for (int k = 0; k <= i; ++k) {
      Rat prod = 1;
      for (int j = i + 1; j <= n; ++j) prod *= g[k] - g[j];
      plus_sum += Rat(out.sigma[k][i]) * prod / lam[k];
    }
    const Rat via_plus = lambda_plus(data, i) / upper * plus_sum;

    // Lambda^- form.
    Rat lower = 1;
    for (int j = 0; j < i; ++j) lower *= g[i] - g[j];
    Rat minus_sum = 0;
    for (int k = 0; k <= i; ++k) {
      Rat prod = 1;
      for (int j = 0; j <= i; ++j)
        if (j != k) prod *= g[k] - g[j];
      minus_sum += Rat(out.sigma[k][i]) / prod;
    }
    const Rat via_minus = lower / lambda_minus(data, i) * minus_sum;

    if (via_plus != via_minus)
      throw Error(ErrorKind::CrossCheckFailed, "c_" + std::to_string(i) + ": Lambda^+ form gives " +
                                                   to_string(via_plus) + ", Lambda^- form gives " + to_string(via_minus));
    out.total[i] = via_plus * rc.r[i];
  }
  return out;
}

RingSpec classify_ring(const RingCoefficients& rc) {
  const int n = rc.n();
  bool projective = true;
  for (const auto& v : rc.r) projective = projective && v == 1;
  if (projective) return RingSpec::projective_space(n);

  if (n >= 3 && n % 2 == 1) {
    bool quadric = true;
    for (int i = 0; i <= n; ++i) quadric = quadric && rc.r[i] == (2 * i >= n + 1 ? Rat(1, 2) : Rat(1));
    if (quadric) return RingSpec::quadric(n);
  }
  return RingSpec::other(rc.r);
}

std::vector<Rat> projective_space_chern(int n) {
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
  Int binom = 1;
  for (int k = 0; k <= n; ++k) {
    c[k] = Rat(binom);
    binom = binom * (n + 1 - k) / (k + 1);
  }
  return c;
}

std::vector<Rat> quadric_chern(int n) {
  // (1+x)^{n+2} times the geometric series of 1/(1+2x).
  std::vector<Int> binom(static_cast<std::size_t>(n) + 1);
  Int b = 1;
  for (int k = 0; k <= n; ++k) {
    binom[k] = b;
    b = b * (n + 2 - k) / (k + 1);
  }
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(0));
  for (int k = 0; k <= n; ++k) {
    Int acc = 0;
    Int geo = 1;
    for (int m = 0; m <= k; ++m) {
      acc += binom[k - m] * geo;
      geo *= -2;
    }
    c[k] = Rat(acc);
  }
  return c;
}

}  // namespace hamfix
