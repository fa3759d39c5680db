#ifndef NEGTYPE_GAP_SEARCH_HPP
#define NEGTYPE_GAP_SEARCH_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include "negtype/simplex_gap.hpp"

namespace negtype {

struct GapOptions {
  std::uint64_t seed = 0;
  int restarts = 20;       // random starts in addition to the uniform start
  int max_iterations = 10000;
  double step_tolerance = 1e-10;
  double gradient_threshold = 1e-6;  // convergence-failure cutoff at the cap
  int max_n = 12;          // enumeration guard for negative_type_gap
  int threads = 1;
  bool closed_form_at_zero = true;  // false forces the numeric path at p = 0
};

namespace detail {

// Euclidean projection onto the probability simplex (sort-based).
inline void project_to_simplex(Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  std::vector<double> u(x.data(), x.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cum = 0.0, theta = 0.0;
  int rho = 0;
  for (int i = 0; i < n; ++i) {
    cum += u[i];
    const double t = (cum - 1.0) / (i + 1);
    if (u[i] - t > 0.0) {
      rho = i + 1;
      theta = t;
    }
  }
  (void)rho;
  for (int i = 0; i < n; ++i) x(i) = std::max(x(i) - theta, 0.0);
}

// The simplex gap as an explicit quadratic in the stacked loads (m, w).
struct GapQuadratic {
  Eigen::MatrixXd cross;   // q x t, d(a_j, b_i)^p
  Eigen::MatrixXd same_a;  // q x q, zero diagonal
  Eigen::MatrixXd same_b;  // t x t, zero diagonal
  int q = 0, t = 0;

  GapQuadratic(const SemiMetricSpace& space, const Simplex& s, double p)
      : q(s.q()), t(s.t()) {
    cross.resize(q, t);
    same_a = Eigen::MatrixXd::Zero(q, q);
    same_b = Eigen::MatrixXd::Zero(t, t);
    const auto dpow = [&](int u, int v) { return std::pow(space.d(u, v), p); };
    for (int j = 0; j < q; ++j)
      for (int i = 0; i < t; ++i) cross(j, i) = dpow(s.a_side[j], s.b_side[i]);
    for (int j1 = 0; j1 < q; ++j1)
      for (int j2 = j1 + 1; j2 < q; ++j2)
        same_a(j1, j2) = same_a(j2, j1) = dpow(s.a_side[j1], s.a_side[j2]);
    for (int i1 = 0; i1 < t; ++i1)
      for (int i2 = i1 + 1; i2 < t; ++i2)
        same_b(i1, i2) = same_b(i2, i1) = dpow(s.b_side[i1], s.b_side[i2]);
  }

  double value(const Eigen::VectorXd& m, const Eigen::VectorXd& w) const {
    return m.dot(cross * w) - 0.5 * m.dot(same_a * m) - 0.5 * w.dot(same_b * w);
  }
  void gradient(const Eigen::VectorXd& m, const Eigen::VectorXd& w,
                Eigen::VectorXd& gm, Eigen::VectorXd& gw) const {
    gm = cross * w - same_a * m;
    gw = cross.transpose() * m - same_b * w;
  }
};

struct PgOutcome {
  Eigen::VectorXd m, w;
  double value = 0.0;
  bool failed = false;
};

// Projected gradient descent with Armijo backtracking on the product of
// the two probability simplices.
inline PgOutcome projected_gradient(const GapQuadratic& quad,
                                    Eigen::VectorXd m, Eigen::VectorXd w,
                                    const GapOptions& opts) {
  Eigen::VectorXd gm(quad.q), gw(quad.t), m_try(quad.q), w_try(quad.t);
  double step = 1.0;
  double f = quad.value(m, w);
  constexpr double kArmijo = 1e-4;
  int iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    quad.gradient(m, w, gm, gw);
    double f_try = f;
    while (true) {
      m_try = m - step * gm;
      w_try = w - step * gw;
      project_to_simplex(m_try);
      project_to_simplex(w_try);
      f_try = quad.value(m_try, w_try);
      const double decrease =
          gm.dot(m_try - m) + gw.dot(w_try - w);  // <= 0 by projection
      if (f_try <= f + kArmijo * decrease || step < 1e-14) break;
      step *= 0.5;
    }
    const double move = std::max((m_try - m).cwiseAbs().maxCoeff(),
                                 (w_try - w).cwiseAbs().maxCoeff());
    m.swap(m_try);
    w.swap(w_try);
    f = f_try;
    if (move < opts.step_tolerance) break;
    step = std::min(step * 2.0, 1e3);
  }
  bool failed = false;
  if (iter >= opts.max_iterations) {
    quad.gradient(m, w, gm, gw);
    m_try = m - gm;
    w_try = w - gw;
    project_to_simplex(m_try);
    project_to_simplex(w_try);
    const double pg_norm = std::sqrt((m_try - m).squaredNorm() +
                                     (w_try - w).squaredNorm());
    failed = pg_norm > opts.gradient_threshold;
  }
  return PgOutcome{std::move(m), std::move(w), f, failed};
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed derived from the simplex itself so results do not depend on the
// order in which simplices are visited.
inline std::uint64_t simplex_seed(std::uint64_t base, const Simplex& s) {
  std::uint64_t h = splitmix64(base ^ 0x6e65677479706541ULL);
  for (int v : s.a_side) h = splitmix64(h ^ static_cast<std::uint64_t>(v + 1));
  h = splitmix64(h ^ 0xffffULL);
  for (int v : s.b_side) h = splitmix64(h ^ static_cast<std::uint64_t>(v + 1));
  return h;
}

// Uniform sample from the probability simplex (normalized exponentials).
inline Eigen::VectorXd random_simplex_point(int n, std::mt19937_64& rng) {
  std::exponential_distribution<double> exp1(1.0);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = exp1(rng);
  return x / x.sum();
}

inline bool simplex_less(const Simplex& a, const Simplex& b) {
  if (a.a_side != b.a_side) return a.a_side < b.a_side;
  return a.b_side < b.b_side;
}

}  // namespace detail

// Minimize gamma over the closure of the normalized load set. p = 0 uses
// the closed form; otherwise projected gradient with random restarts.
// Witness weights below 1e-12 are snapped to the corresponding sub-simplex.
inline GapResult min_gap_over_loads(const SemiMetricSpace& space,
                                    const Simplex& simplex, double p,
                                    const GapOptions& opts = {}) {
  validate_simplex(space, simplex);
  if (p < 0.0) throw NegativeExponent("p = " + std::to_string(p));
  const int q = simplex.q(), t = simplex.t();

  if (p == 0.0 && opts.closed_form_at_zero) {
    auto [value, loads] = closed_form_zero_gap_simplex(q, t);
    return GapResult{value, simplex, std::move(loads), GapMethod::ClosedForm,
                     false};
  }

  const detail::GapQuadratic quad(space, simplex, p);
  std::mt19937_64 rng(detail::simplex_seed(opts.seed, simplex));

  detail::PgOutcome best = detail::projected_gradient(
      quad, Eigen::VectorXd::Constant(q, 1.0 / q),
      Eigen::VectorXd::Constant(t, 1.0 / t), opts);
  bool any_failed = best.failed;
  for (int r = 0; r < opts.restarts; ++r) {
    auto out = detail::projected_gradient(
        quad, detail::random_simplex_point(q, rng),
        detail::random_simplex_point(t, rng), opts);
    any_failed = any_failed || out.failed;
    if (out.value < best.value) best = std::move(out);
  }

  // Snap near-zero weights to the sub-simplex they represent.
  Simplex witness;
  LoadVector loads;
  for (int j = 0; j < q; ++j)
    if (best.m(j) > detail::kZeroWeightSnap) {
      witness.a_side.push_back(simplex.a_side[j]);
      loads.m.push_back(best.m(j));
    }
  for (int i = 0; i < t; ++i)
    if (best.w(i) > detail::kZeroWeightSnap) {
      witness.b_side.push_back(simplex.b_side[i]);
      loads.w.push_back(best.w(i));
    }
  const auto renorm = [](std::vector<double>& v) {
    const double s = std::accumulate(v.begin(), v.end(), 0.0);
    for (double& x : v) x /= s;
  };
  renorm(loads.m);
  renorm(loads.w);
  loads.normalized = true;

  const double gamma = gap_value(space, witness, loads, p).gamma;
  return GapResult{gamma, std::move(witness), std::move(loads),
                   GapMethod::ProjectedGradient, any_failed};
}

namespace detail {

// Every split of a vertex subset into two nonempty sides, deduplicated
// under the a/b swap by pinning the smallest used vertex to the a-side.
inline std::vector<Simplex> enumerate_simplices(int n) {
  std::vector<Simplex> out;
  for (std::uint32_t used = 0; used < (1u << n); ++used) {
    if (std::popcount(used) < 2) continue;
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (used & (1u << v)) members.push_back(v);
    const int m = static_cast<int>(members.size());
    // members[0] stays on the a-side; split the rest freely.
    for (std::uint32_t split = 0; split < (1u << (m - 1)); ++split) {
      Simplex s;
      s.a_side.push_back(members[0]);
      for (int k = 1; k < m; ++k) {
        if (split & (1u << (k - 1)))
          s.b_side.push_back(members[k]);
        else
          s.a_side.push_back(members[k]);
      }
      if (s.b_side.empty()) continue;
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
    const int sa = a.q() + a.t(), sb = b.q() + b.t();
    if (sa != sb) return sa > sb;  // large simplices first
    return simplex_less(a, b);
  });
  return out;
}

}  // namespace detail

// Gamma_X^p: minimum of min_gap_over_loads over all simplices in X.
// Ties break to the lexicographically smallest simplex, so the result does
// not depend on the execution order.
inline GapResult negative_type_gap(const SemiMetricSpace& space, double p,
                                   const GapOptions& opts = {}) {
  if (p < 0.0) throw NegativeExponent("p = " + std::to_string(p));
  if (space.n < 2) throw TooFewPoints("negative_type_gap needs n >= 2");
  if (space.n > opts.max_n)
    throw TooLarge("n = " + std::to_string(space.n) +
                   " exceeds the enumeration cap " +
                   std::to_string(opts.max_n) + " (raise max_n to override)");

  const auto simplices = detail::enumerate_simplices(space.n);
  const auto better = [](const GapResult& a, const GapResult& b) {
    if (a.gamma_star != b.gamma_star) return a.gamma_star < b.gamma_star;
    return detail::simplex_less(a.witness_simplex, b.witness_simplex);
  };

  const int threads = std::max(1, opts.threads);
  std::vector<GapResult> local(threads);
  std::vector<char> any_failed(threads, 0);
  const auto worker = [&](int id) {
    GapResult best;
    bool have = false;
    for (std::size_t k = id; k < simplices.size();
         k += static_cast<std::size_t>(threads)) {
      GapResult r = min_gap_over_loads(space, simplices[k], p, opts);
      any_failed[id] |= r.convergence_failed;
      if (!have || better(r, best)) {
        best = std::move(r);
        have = true;
      }
    }
    local[id] = std::move(best);
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& th : pool) th.join();
  }

  GapResult best = std::move(local[0]);
  for (int id = 1; id < threads; ++id)
    if (!local[id].witness_simplex.a_side.empty() && better(local[id], best))
      best = std::move(local[id]);
  best.convergence_failed = false;
  for (int id = 0; id < threads; ++id)
    best.convergence_failed |= static_cast<bool>(any_failed[id]);
  best.method = GapMethod::Enumeration;
  return best;
}

}  // namespace negtype

#endif  // NEGTYPE_GAP_SEARCH_HPP
