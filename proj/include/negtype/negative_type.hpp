#ifndef NEGTYPE_NEGATIVE_TYPE_HPP
#define NEGTYPE_NEGATIVE_TYPE_HPP

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <optional>
#include <variant>
#include <vector>

#include "negtype/metric_space.hpp"

namespace negtype {

// Eigenvalues of the power matrix restricted to the zero-sum hyperplane,
// obtained by two-sided centering. The all-ones direction contributes one
// structural zero eigenvalue which is reported but excluded from the
// strictness test.
struct ProjectedSpectrum {
  std::vector<double> eigenvalues;  // ascending, ones-direction excluded
  double tolerance = 0.0;           // absolute threshold used
};

// A concrete zero-sum vector certifying failure: qform(eta) > tolerance in
// the ordinary case, |qform(eta)| <= tolerance with eta != 0 in the
// strictness case.
struct ViolatingVector {
  Eigen::VectorXd eta;
  double value = 0.0;
  double tolerance = 0.0;
};

struct Verdict {
  bool holds = false;
  std::variant<ProjectedSpectrum, ViolatingVector> certificate;
};

struct MaxTypeResult {
  std::optional<double> p_max;  // nullopt = unbounded
  double lo = 0.0, hi = 0.0;    // final bracket (bounded case)
  double tolerance = 0.0;
};

// Full double sum over ordered pairs: sum_{i,j} d(i,j)^p eta_i eta_j.
// Zero-sum is not required here; callers enforce it where needed.
inline double qform(const SemiMetricSpace& space, double p,
                    const Eigen::VectorXd& eta) {
  if (eta.size() != space.n)
    throw DimensionMismatch("eta has length " + std::to_string(eta.size()) +
                            ", space has " + std::to_string(space.n) +
                            " points");
  const PowerMatrix pm = power_matrix(space, p);
  return eta.dot(pm.a * eta);
}

namespace detail {

struct ProjectedEigen {
  std::vector<double> values;          // ones-direction excluded, ascending
  std::vector<Eigen::VectorXd> vecs;   // matching eigenvectors (zero-sum)
  double scale = 0.0;                  // largest |entry| of the power matrix
};

// Eigendecomposition of C A C with C = I - (1/n) J. Eigenvectors of
// nonzero eigenvalues are automatically zero-sum; the one closest to the
// all-ones direction is dropped.
inline ProjectedEigen projected_spectrum(const SemiMetricSpace& space,
                                         double p) {
  const int n = space.n;
  const PowerMatrix pm = power_matrix(space, p);
  const Eigen::MatrixXd center =
      Eigen::MatrixXd::Identity(n, n) -
      Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  const Eigen::MatrixXd projected = center * pm.a * center;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(projected);

  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  int ones_index = 0;
  double best = -1.0;
  for (int i = 0; i < n; ++i) {
    const double overlap = std::abs(es.eigenvectors().col(i).dot(ones));
    if (overlap > best) {
      best = overlap;
      ones_index = i;
    }
  }

  ProjectedEigen out;
  out.scale = pm.a.cwiseAbs().maxCoeff();
  for (int i = 0; i < n; ++i) {
    if (i == ones_index) continue;
    Eigen::VectorXd v = es.eigenvectors().col(i);
    v.array() -= v.mean();  // re-center against rounding
    out.values.push_back(es.eigenvalues()(i));
    out.vecs.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

// p-negative type test: the centered power matrix must be negative
// semidefinite. tol is relative to the largest power-matrix entry.
inline Verdict check_negative_type(const SemiMetricSpace& space, double p,
                                   double tol = 1e-9) {
  if (p < 0.0) throw NegativeExponent("p = " + std::to_string(p));
  if (tol <= 0.0) throw NonpositiveTolerance("tol = " + std::to_string(tol));
  if (space.n < 2)
    return Verdict{true, ProjectedSpectrum{{}, 0.0}};

  const auto eig = detail::projected_spectrum(space, p);
  const double abs_tol = tol * std::max(eig.scale, 1.0);
  const double top = eig.values.back();
  if (top > abs_tol) {
    const Eigen::VectorXd& eta = eig.vecs.back();
    return Verdict{false, ViolatingVector{eta, qform(space, p, eta), abs_tol}};
  }
  return Verdict{true, ProjectedSpectrum{eig.values, abs_tol}};
}

// Strict p-negative type: negative definite on the hyperplane. A projected
// eigenvalue inside [-tol, tol] yields a near-null violating vector.
inline Verdict check_strict_negative_type(const SemiMetricSpace& space,
                                          double p, double tol = 1e-9) {
  if (p < 0.0) throw NegativeExponent("p = " + std::to_string(p));
  if (tol <= 0.0) throw NonpositiveTolerance("tol = " + std::to_string(tol));
  if (space.n < 2)
    return Verdict{true, ProjectedSpectrum{{}, 0.0}};

  const auto eig = detail::projected_spectrum(space, p);
  const double abs_tol = tol * std::max(eig.scale, 1.0);
  const double top = eig.values.back();
  if (top >= -abs_tol) {
    const Eigen::VectorXd& eta = eig.vecs.back();
    return Verdict{false, ViolatingVector{eta, qform(space, p, eta), abs_tol}};
  }
  return Verdict{true, ProjectedSpectrum{eig.values, abs_tol}};
}

// Locate the maximal p with negative type by bisection; valid because type
// holds exactly on an interval [0, p_max]. Doubling from p = 1 finds the
// initial bracket; no failure by p = 64 reports Unbounded.
inline MaxTypeResult max_negative_type(const SemiMetricSpace& space,
                                       double tol = 1e-6,
                                       double eig_tol = 1e-9) {
  if (space.n < 2) throw TooFewPoints("max_negative_type needs n >= 2");
  if (tol <= 0.0) throw NonpositiveTolerance("tol = " + std::to_string(tol));

  constexpr double kCap = 64.0;
  double lo = 0.0;
  double hi = 1.0;
  while (check_negative_type(space, hi, eig_tol).holds) {
    lo = hi;
    hi *= 2.0;
    if (hi > kCap) return MaxTypeResult{std::nullopt, lo, kCap, tol};
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (check_negative_type(space, mid, eig_tol).holds)
      lo = mid;
    else
      hi = mid;
  }
  return MaxTypeResult{0.5 * (lo + hi), lo, hi, tol};
}

}  // namespace negtype

#endif  // NEGTYPE_NEGATIVE_TYPE_HPP
