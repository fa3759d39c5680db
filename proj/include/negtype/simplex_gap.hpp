#ifndef NEGTYPE_SIMPLEX_GAP_HPP
#define NEGTYPE_SIMPLEX_GAP_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "negtype/metric_space.hpp"
#include "negtype/negative_type.hpp"

namespace negtype {

// A (q,t)-simplex: two disjoint nonempty lists of distinct vertex indices.
struct Simplex {
  std::vector<int> a_side;
  std::vector<int> b_side;

  int q() const { return static_cast<int>(a_side.size()); }
  int t() const { return static_cast<int>(b_side.size()); }
};

// Positive weights on the two sides; normalized means each side sums to 1.
struct LoadVector {
  std::vector<double> m;  // a-side
  std::vector<double> w;  // b-side
  bool normalized = false;
};

// L: weighted same-side sums, R: weighted cross-side sum, gamma = R - L.
struct GapBreakdown {
  double L = 0.0;
  double R = 0.0;
  double gamma = 0.0;
  double p = 0.0;
};

enum class GapMethod { ClosedForm, ProjectedGradient, Enumeration };

struct GapResult {
  double gamma_star = 0.0;
  Simplex witness_simplex;
  LoadVector witness_loads;
  GapMethod method = GapMethod::ClosedForm;
  bool convergence_failed = false;
};

namespace detail {
inline constexpr double kNormalizationSlack = 1e-12;
inline constexpr double kZeroWeightSnap = 1e-12;
}  // namespace detail

inline void validate_simplex(const SemiMetricSpace& space,
                             const Simplex& simplex) {
  if (simplex.a_side.empty() || simplex.b_side.empty())
    throw InvalidSimplex("both sides must be nonempty");
  std::unordered_set<int> seen;
  for (const auto& side : {simplex.a_side, simplex.b_side})
    for (int v : side) {
      if (v < 0 || v >= space.n)
        throw InvalidSimplex("vertex index " + std::to_string(v) +
                             " out of range");
      if (!seen.insert(v).second)
        throw InvalidSimplex("vertex " + std::to_string(v) + " repeated");
    }
}

inline void validate_normalized(const Simplex& simplex,
                                const LoadVector& loads) {
  if (static_cast<int>(loads.m.size()) != simplex.q() ||
      static_cast<int>(loads.w.size()) != simplex.t())
    throw UnnormalizedLoads("load vector shape does not match simplex");
  for (const auto& side : {loads.m, loads.w}) {
    double sum = 0.0;
    for (double v : side) {
      if (v <= 0.0) throw UnnormalizedLoads("weights must be positive");
      sum += v;
    }
    if (std::abs(sum - 1.0) > detail::kNormalizationSlack)
      throw UnnormalizedLoads("side sums to " + std::to_string(sum));
  }
}

inline LoadVector uniform_loads(int q, int t) {
  return LoadVector{std::vector<double>(q, 1.0 / q),
                    std::vector<double>(t, 1.0 / t), true};
}

// The simplex gap gamma_D^p(omega) = R(p) - L(p).
inline GapBreakdown gap_value(const SemiMetricSpace& space,
                              const Simplex& simplex, const LoadVector& loads,
                              double p) {
  validate_simplex(space, simplex);
  validate_normalized(simplex, loads);
  if (p < 0.0) throw NegativeExponent("p = " + std::to_string(p));

  const auto dpow = [&](int u, int v) { return std::pow(space.d(u, v), p); };
  const int q = simplex.q(), t = simplex.t();
  double L = 0.0;
  for (int j1 = 0; j1 < q; ++j1)
    for (int j2 = j1 + 1; j2 < q; ++j2)
      L += loads.m[j1] * loads.m[j2] *
           dpow(simplex.a_side[j1], simplex.a_side[j2]);
  for (int i1 = 0; i1 < t; ++i1)
    for (int i2 = i1 + 1; i2 < t; ++i2)
      L += loads.w[i1] * loads.w[i2] *
           dpow(simplex.b_side[i1], simplex.b_side[i2]);
  double R = 0.0;
  for (int j = 0; j < q; ++j)
    for (int i = 0; i < t; ++i)
      R += loads.m[j] * loads.w[i] * dpow(simplex.a_side[j], simplex.b_side[i]);
  return GapBreakdown{L, R, R - L, p};
}

// At p = 0 the minimum over normalized loads is (1/q + 1/t)/2, attained at
// the uniform load vector, independently of the metric.
inline std::pair<double, LoadVector> closed_form_zero_gap_simplex(int q,
                                                                 int t) {
  return {0.5 * (1.0 / q + 1.0 / t), uniform_loads(q, t)};
}

// Gamma_X^0 for an n-point space.
inline double zero_gap(int n) {
  if (n < 2) throw TooFewPoints("zero_gap needs n >= 2");
  const int q = n / 2;
  const int t = n - q;
  return 0.5 * (1.0 / q + 1.0 / t);
}

// A loaded simplex attains Gamma_X^0 exactly when the sides have sizes
// floor(n/2), ceil(n/2) and both sides are uniformly loaded.
inline bool is_extreme_simplex(int n, const Simplex& simplex,
                               const LoadVector& loads, double tol = 1e-9) {
  validate_normalized(simplex, loads);
  const int q = simplex.q(), t = simplex.t();
  const int lo = n / 2, hi = n - n / 2;
  if (!((q == lo && t == hi) || (q == hi && t == lo))) return false;
  for (double v : loads.m)
    if (std::abs(v - 1.0 / q) > tol) return false;
  for (double v : loads.w)
    if (std::abs(v - 1.0 / t) > tol) return false;
  return true;
}

}  // namespace negtype

#endif  // NEGTYPE_SIMPLEX_GAP_HPP
