#ifndef NEGTYPE_METRIC_SPACE_HPP
#define NEGTYPE_METRIC_SPACE_HPP

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <vector>

#include "negtype/errors.hpp"

namespace negtype {

enum class Mode { Metric, SemiMetric };

inline const char* mode_name(Mode m) {
  return m == Mode::Metric ? "metric" : "semimetric";
}

// A validated finite (semi-)metric space: symmetric distance matrix with
// zero diagonal and strictly positive off-diagonal entries. In Metric mode
// the triangle inequality has additionally been verified.
struct SemiMetricSpace {
  int n = 0;
  Eigen::MatrixXd d;
  std::vector<std::string> labels;  // empty when unnamed
  Mode mode = Mode::Metric;
};

// d^p entrywise off-diagonal, zero diagonal. At p = 0 the off-diagonal is
// identically 1 (the metric is forgotten).
struct PowerMatrix {
  double p = 0.0;
  Eigen::MatrixXd a;
};

namespace detail {
// Relative slack absorbing rounding in user-supplied matrices.
inline constexpr double kTriangleSlack = 1e-12;
}  // namespace detail

inline SemiMetricSpace build_space(const Eigen::MatrixXd& matrix, Mode mode,
                                   std::vector<std::string> labels = {}) {
  const auto n = matrix.rows();
  if (matrix.cols() != n)
    throw NotSquare("distance matrix is " + std::to_string(n) + "x" +
                    std::to_string(matrix.cols()));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double v = matrix(i, j);
      if (!std::isfinite(v))
        throw NonFiniteDistance("entry (" + std::to_string(i) + "," +
                                std::to_string(j) + ") is not finite");
      if (v < 0.0)
        throw NegativeDistance("entry (" + std::to_string(i) + "," +
                               std::to_string(j) + ") = " + std::to_string(v));
    }
  }
  for (Eigen::Index i = 0; i < n; ++i)
    if (matrix(i, i) != 0.0)
      throw NonzeroDiagonal("d[" + std::to_string(i) + "][" +
                            std::to_string(i) + "] = " +
                            std::to_string(matrix(i, i)));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (matrix(i, j) != matrix(j, i))
        throw AsymmetricMatrix("d[" + std::to_string(i) + "][" +
                               std::to_string(j) + "] != d[" +
                               std::to_string(j) + "][" + std::to_string(i) +
                               "]");
      if (matrix(i, j) == 0.0)
        throw ZeroOffDiagonal("points " + std::to_string(i) + " and " +
                              std::to_string(j) +
                              " are at distance 0 (duplicate points)");
    }
  if (mode == Mode::Metric) {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k) {
          const double lhs = matrix(i, k);
          const double rhs = matrix(i, j) + matrix(j, k);
          if (lhs > rhs * (1.0 + detail::kTriangleSlack))
            throw TriangleViolation(
                "d(" + std::to_string(i) + "," + std::to_string(k) + ") > d(" +
                std::to_string(i) + "," + std::to_string(j) + ") + d(" +
                std::to_string(j) + "," + std::to_string(k) + ")");
        }
  }
  if (!labels.empty() && static_cast<Eigen::Index>(labels.size()) != n)
    throw DimensionMismatch("label count does not match vertex count");
  return SemiMetricSpace{static_cast<int>(n), matrix, std::move(labels), mode};
}

inline double min_off_diagonal(const SemiMetricSpace& space) {
  double lo = std::numeric_limits<double>::infinity();
  for (int i = 0; i < space.n; ++i)
    for (int j = i + 1; j < space.n; ++j) lo = std::min(lo, space.d(i, j));
  return lo;
}

// diam X / min{d(x,y) : x != y}; always >= 1.
inline double scaled_diameter(const SemiMetricSpace& space) {
  if (space.n < 2) throw TooFewPoints("scaled_diameter needs n >= 2");
  return space.d.maxCoeff() / min_off_diagonal(space);
}

// Divide by the smallest positive distance so it becomes exactly 1.
inline SemiMetricSpace rescale_to_unit_min(const SemiMetricSpace& space) {
  if (space.n < 2) throw TooFewPoints("rescale_to_unit_min needs n >= 2");
  const double lo = min_off_diagonal(space);
  if (lo == 1.0) return space;
  SemiMetricSpace out = space;
  out.d /= lo;
  for (int i = 0; i < out.n; ++i)
    for (int j = i + 1; j < out.n; ++j)
      if (space.d(i, j) == lo) out.d(j, i) = out.d(i, j) = 1.0;
  return out;
}

inline PowerMatrix power_matrix(const SemiMetricSpace& space, double p) {
  if (p < 0.0) throw NegativeExponent("p = " + std::to_string(p));
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(space.n, space.n);
  for (int i = 0; i < space.n; ++i)
    for (int j = 0; j < space.n; ++j)
      if (i != j) a(i, j) = std::pow(space.d(i, j), p);
  return PowerMatrix{p, std::move(a)};
}

}  // namespace negtype

#endif  // NEGTYPE_METRIC_SPACE_HPP
