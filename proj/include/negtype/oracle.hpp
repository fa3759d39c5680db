#ifndef NEGTYPE_ORACLE_HPP
#define NEGTYPE_ORACLE_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "negtype/negative_type.hpp"
#include "negtype/simplex_gap.hpp"

namespace negtype {

struct ProbeResult {
  double worst_value = 0.0;
  Eigen::VectorXd worst_vector;
  int trials = 0;
  std::uint64_t seed = 0;
};

namespace detail {

// Recursive enumeration of weak integer compositions of `total` into
// `parts` parts. Integer lattice, so the sum-to-one constraints hold
// without floating drift. Zero parts cover the closure boundary, where a
// load degenerates to a sub-simplex.
inline void for_each_composition(
    int total, int parts, std::vector<int>& scratch,
    const std::function<void(const std::vector<int>&)>& fn) {
  if (parts == 1) {
    scratch.push_back(total);
    fn(scratch);
    scratch.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    scratch.push_back(first);
    for_each_composition(total - first, parts - 1, scratch, fn);
    scratch.pop_back();
  }
}

}  // namespace detail

// Brute-force lattice minimum of the simplex gap over normalized loads
// with coordinates in multiples of `resolution`. Upper bound on the true
// minimum; converges to it as the resolution shrinks.
inline double grid_min_gap(const SemiMetricSpace& space, const Simplex& simplex,
                           double p, double resolution) {
  validate_simplex(space, simplex);
  const int q = simplex.q(), t = simplex.t();
  if (q + t > 6)
    throw TooLargeSimplex("grid oracle is limited to q + t <= 6");
  if (resolution <= 0.0 || resolution > 0.25)
    throw BadResolution("resolution must lie in (0, 0.25]");
  const int steps = static_cast<int>(std::llround(1.0 / resolution));

  std::vector<std::vector<double>> m_points, w_points;
  std::vector<int> scratch;
  detail::for_each_composition(steps, q, scratch,
                               [&](const std::vector<int>& c) {
                                 std::vector<double> v(c.size());
                                 for (std::size_t i = 0; i < c.size(); ++i)
                                   v[i] = static_cast<double>(c[i]) / steps;
                                 m_points.push_back(std::move(v));
                               });
  detail::for_each_composition(steps, t, scratch,
                               [&](const std::vector<int>& c) {
                                 std::vector<double> v(c.size());
                                 for (std::size_t i = 0; i < c.size(); ++i)
                                   v[i] = static_cast<double>(c[i]) / steps;
                                 w_points.push_back(std::move(v));
                               });

  // Direct evaluation, since lattice points with zero weights would be
  // rejected by the load validation.
  const auto dpow = [&](int u, int v) { return std::pow(space.d(u, v), p); };
  const auto gamma_at = [&](const std::vector<double>& m,
                            const std::vector<double>& w) {
    double L = 0.0, R = 0.0;
    for (int j1 = 0; j1 < q; ++j1)
      for (int j2 = j1 + 1; j2 < q; ++j2)
        L += m[j1] * m[j2] * dpow(simplex.a_side[j1], simplex.a_side[j2]);
    for (int i1 = 0; i1 < t; ++i1)
      for (int i2 = i1 + 1; i2 < t; ++i2)
        L += w[i1] * w[i2] * dpow(simplex.b_side[i1], simplex.b_side[i2]);
    for (int j = 0; j < q; ++j)
      for (int i = 0; i < t; ++i)
        R += m[j] * w[i] * dpow(simplex.a_side[j], simplex.b_side[i]);
    return R - L;
  };

  double best = std::numeric_limits<double>::infinity();
  for (const auto& m : m_points)
    for (const auto& w : w_points)
      best = std::min(best, gamma_at(m, w));
  return best;
}

// Randomized search for violations of the negative-type inequality:
// standard normal samples, centered to the zero-sum hyperplane, scaled to
// unit 1-norm. A positive worst value certifies failure; a negative one
// proves nothing.
inline ProbeResult random_qform_probe(const SemiMetricSpace& space, double p,
                                      int trials, std::uint64_t seed = 0) {
  if (trials < 1) throw DimensionMismatch("trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const PowerMatrix pm = power_matrix(space, p);

  ProbeResult result;
  result.trials = trials;
  result.seed = seed;
  result.worst_value = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd eta(space.n);
  for (int trial = 0; trial < trials; ++trial) {
    for (int i = 0; i < space.n; ++i) eta(i) = normal(rng);
    eta.array() -= eta.mean();
    const double norm1 = eta.cwiseAbs().sum();
    if (norm1 == 0.0) continue;
    eta /= norm1;
    const double value = eta.dot(pm.a * eta);
    if (value > result.worst_value) {
      result.worst_value = value;
      result.worst_vector = eta;
    }
  }
  return result;
}

// Pairwise Euclidean distances of a point cloud, in Metric mode.
inline SemiMetricSpace euclidean_space(
    const std::vector<std::vector<double>>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 1) throw TooFewPoints("empty point cloud");
  const std::size_t dim = points[0].size();
  for (const auto& pt : points)
    if (pt.size() != dim)
      throw DimensionMismatch("inconsistent point dimensions");

  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        const double diff = points[i][k] - points[j][k];
        s += diff * diff;
      }
      if (s == 0.0)
        throw DuplicatePoints("points " + std::to_string(i) + " and " +
                              std::to_string(j) + " coincide");
      d(i, j) = d(j, i) = std::sqrt(s);
    }
  return build_space(d, Mode::Metric);
}

}  // namespace negtype

#endif  // NEGTYPE_ORACLE_HPP
