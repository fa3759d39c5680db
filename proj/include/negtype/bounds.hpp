#ifndef NEGTYPE_BOUNDS_HPP
#define NEGTYPE_BOUNDS_HPP

#include <cmath>
#include <optional>
#include <string>

#include "negtype/metric_space.hpp"
#include "negtype/simplex_gap.hpp"

namespace negtype {

// Cardinality/diameter lower bound on the maximal p-negative type:
// ordinary type on [0, zeta], strict type on [0, zeta). zeta is nullopt
// (unbounded) for multiples of the discrete metric.
struct ZetaReport {
  int n = 0;
  double diameter_ratio = 1.0;
  double gamma0 = 0.0;               // Gamma_X^0, from zero_gap(n)
  std::optional<double> zeta;        // nullopt = strict type for all p >= 0
  bool metric_bound_only = false;    // metric mode with ratio > 2: zeta is a
                                     // lower bound with no matching construction

  std::string strict_interval() const {
    if (!zeta) return "[0, inf)";
    return "[0, " + std::to_string(*zeta) + ")";
  }
};

inline std::optional<double> zeta(int n, double diameter_ratio) {
  if (n < 3) throw TooFewPoints("zeta needs n >= 3");
  if (diameter_ratio < 1.0)
    throw InvalidRatio("scaled diameter must be >= 1, got " +
                       std::to_string(diameter_ratio));
  if (diameter_ratio == 1.0) return std::nullopt;
  const double gamma = zero_gap(n);
  return std::log(1.0 / (1.0 - gamma)) / std::log(diameter_ratio);
}

inline ZetaReport strictness_report(const SemiMetricSpace& space) {
  if (space.n < 3) throw TooFewPoints("strictness_report needs n >= 3");
  ZetaReport report;
  report.n = space.n;
  report.diameter_ratio = scaled_diameter(space);
  report.gamma0 = zero_gap(space.n);
  report.zeta = zeta(space.n, report.diameter_ratio);
  report.metric_bound_only =
      space.mode == Mode::Metric && report.diameter_ratio > 2.0;
  return report;
}

// Complete-bipartite extremal space: cross distances 1, same-side distances
// equal to the requested scaled diameter. Its maximal p-negative type is
// exactly zeta(n, diameter_ratio). Ratios above 2 violate the triangle
// inequality and need SemiMetric mode.
inline SemiMetricSpace construct_extremal(int n, double diameter_ratio,
                                          Mode mode = Mode::Metric) {
  if (n < 3) throw TooFewPoints("construct_extremal needs n >= 3");
  if (diameter_ratio <= 1.0)
    throw InvalidRatio("scaled diameter must be > 1, got " +
                       std::to_string(diameter_ratio));
  if (mode == Mode::Metric && diameter_ratio > 2.0)
    throw RatioNeedsSemiMetric("scaled diameter " +
                               std::to_string(diameter_ratio) +
                               " > 2 requires SemiMetric mode");
  const int q = n / 2;
  Eigen::MatrixXd d(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        d(i, j) = 0.0;
      else if ((i < q) == (j < q))
        d(i, j) = diameter_ratio;
      else
        d(i, j) = 1.0;
    }
  std::vector<std::string> labels;
  for (int j = 0; j < q; ++j) labels.push_back("a" + std::to_string(j + 1));
  for (int i = q; i < n; ++i)
    labels.push_back("b" + std::to_string(i - q + 1));
  return build_space(d, mode, std::move(labels));
}

}  // namespace negtype

#endif  // NEGTYPE_BOUNDS_HPP
