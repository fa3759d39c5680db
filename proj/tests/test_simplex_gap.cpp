#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace negtype;
using namespace negtype::testing;
using Catch::Approx;

TEST_CASE("gap_value on the bipartite space") {
  const auto space = bipartite4();
  const Simplex both{{0, 1}, {2, 3}};
  const auto uniform = uniform_loads(2, 2);

  const auto at0 = gap_value(space, both, uniform, 0.0);
  CHECK(at0.L == Approx(0.5));
  CHECK(at0.R == Approx(1.0));
  CHECK(at0.gamma == Approx(0.5));

  const auto at1 = gap_value(space, both, uniform, 1.0);
  CHECK(at1.L == Approx(1.0));
  CHECK(at1.R == Approx(1.0));
  CHECK(at1.gamma == Approx(0.0).margin(1e-12));
}

TEST_CASE("gap_value with a singleton a-side") {
  const auto space = collinear3();
  const Simplex s{{1}, {0, 2}};  // middle point against the two ends
  const auto loads = uniform_loads(1, 2);
  const auto bd = gap_value(space, s, loads, 0.0);
  CHECK(bd.gamma == Approx(0.75));  // 1 - 1/4, no a-side term
}

TEST_CASE("gap_value input validation") {
  const auto space = bipartite4();
  CHECK_THROWS_AS(
      gap_value(space, Simplex{{0}, {0, 1}}, uniform_loads(1, 2), 1.0),
      InvalidSimplex);
  CHECK_THROWS_AS(gap_value(space, Simplex{{0}, {}}, uniform_loads(1, 0), 1.0),
                  InvalidSimplex);
  CHECK_THROWS_AS(gap_value(space, Simplex{{0}, {9}}, uniform_loads(1, 1), 1.0),
                  InvalidSimplex);

  LoadVector bad{{0.6, 0.6}, {0.5, 0.5}, false};
  CHECK_THROWS_AS(gap_value(space, Simplex{{0, 1}, {2, 3}}, bad, 1.0),
                  UnnormalizedLoads);
}

TEST_CASE("closed_form_zero_gap_simplex") {
  auto [v11, l11] = closed_form_zero_gap_simplex(1, 1);
  CHECK(v11 == 1.0);
  CHECK(l11.m == std::vector<double>{1.0});
  CHECK(l11.w == std::vector<double>{1.0});

  CHECK(closed_form_zero_gap_simplex(2, 2).first == Approx(0.5));
  CHECK(closed_form_zero_gap_simplex(2, 3).first == Approx(5.0 / 12));
}

TEST_CASE("zero_gap") {
  CHECK(zero_gap(2) == 1.0);
  CHECK(zero_gap(5) == Approx(5.0 / 12));
  CHECK(zero_gap(1000) == Approx(0.002));
  CHECK_THROWS_AS(zero_gap(1), TooFewPoints);

  double prev = zero_gap(2);
  for (int n = 3; n <= 40; ++n) {
    CHECK(zero_gap(n) < prev);
    prev = zero_gap(n);
  }
}

TEST_CASE("is_extreme_simplex") {
  CHECK(is_extreme_simplex(5, Simplex{{0, 1}, {2, 3, 4}}, uniform_loads(2, 3)));
  CHECK(is_extreme_simplex(5, Simplex{{2, 3, 4}, {0, 1}}, uniform_loads(3, 2)));
  CHECK_FALSE(
      is_extreme_simplex(5, Simplex{{0}, {1, 2, 3, 4}}, uniform_loads(1, 4)));
  CHECK_FALSE(is_extreme_simplex(
      4, Simplex{{0, 1}, {2, 3}},
      LoadVector{{0.6, 0.4}, {0.5, 0.5}, true}));
}

TEST_CASE("min_gap_over_loads") {
  std::mt19937_64 rng(61);
  const auto space = random_semimetric_space(6, rng);

  // p = 0: closed form at uniform loads, regardless of the metric
  const auto r0 = min_gap_over_loads(space, Simplex{{0, 2}, {1, 4, 5}}, 0.0);
  CHECK(r0.gamma_star == Approx(5.0 / 12));
  CHECK(r0.method == GapMethod::ClosedForm);

  // bipartite space at p = 1: minimum 0 at uniform loads
  const auto r1 =
      min_gap_over_loads(bipartite4(), Simplex{{0, 1}, {2, 3}}, 1.0);
  CHECK(r1.gamma_star == Approx(0.0).margin(1e-8));
  for (double v : r1.witness_loads.m) CHECK(v == Approx(0.5).margin(1e-4));

  // single cross edge: gamma = d(a,b)^p at loads (1 | 1)
  const auto r2 = min_gap_over_loads(space, Simplex{{1}, {3}}, 1.7);
  CHECK(r2.gamma_star == Approx(std::pow(space.d(1, 3), 1.7)));
}

TEST_CASE("min_gap_over_loads matches the grid oracle") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 6; ++trial) {
    const auto space = random_semimetric_space(6, rng);
    Simplex s = random_simplex(6, rng);
    while (s.q() + s.t() > 5) s = random_simplex(6, rng);
    for (double p : {0.5, 1.0, 2.0}) {
      const double numeric = min_gap_over_loads(space, s, p).gamma_star;
      const double grid = grid_min_gap(space, s, p, 0.02);
      CHECK(std::abs(numeric - grid) <= 5e-3);
    }
  }
}

TEST_CASE("numeric minimization at p = 0 recovers the closed form") {
  std::mt19937_64 rng(71);
  GapOptions opts;
  opts.closed_form_at_zero = false;
  for (int q = 1; q <= 4; ++q)
    for (int t = q; q + t <= 8; ++t) {
      const int n = q + t;
      const auto space = random_semimetric_space(n, rng);
      Simplex s;
      for (int v = 0; v < q; ++v) s.a_side.push_back(v);
      for (int v = q; v < n; ++v) s.b_side.push_back(v);
      const auto r = min_gap_over_loads(space, s, 0.0, opts);
      CHECK(r.gamma_star == Approx(0.5 * (1.0 / q + 1.0 / t)).margin(1e-6));
      for (double v : r.witness_loads.m)
        CHECK(v == Approx(1.0 / q).margin(1e-4));
      for (double v : r.witness_loads.w)
        CHECK(v == Approx(1.0 / t).margin(1e-4));
    }
}

TEST_CASE("negative_type_gap") {
  std::mt19937_64 rng(73);

  const auto five = random_semimetric_space(5, rng);
  CHECK(negative_type_gap(five, 0.0).gamma_star == Approx(5.0 / 12));

  const auto r = negative_type_gap(bipartite4(), 1.0);
  CHECK(r.gamma_star == Approx(0.0).margin(1e-7));
  CHECK(r.method == GapMethod::Enumeration);

  Eigen::MatrixXd pair(2, 2);
  pair << 0, 1, 1, 0;
  CHECK(negative_type_gap(build_space(pair, Mode::Metric), 0.0).gamma_star ==
        Approx(1.0));

  GapOptions small;
  small.max_n = 4;
  CHECK_THROWS_AS(negative_type_gap(five, 1.0, small), TooLarge);
}

TEST_CASE("enumerated gap at p = 0 depends only on the cardinality") {
  std::mt19937_64 rng(79);
  for (int n = 2; n <= 8; ++n) {
    const auto space = random_semimetric_space(n, rng);
    const auto r = negative_type_gap(space, 0.0);
    CHECK(std::abs(r.gamma_star - zero_gap(n)) <= 1e-9);
    CHECK(is_extreme_simplex(n, r.witness_simplex, r.witness_loads, 1e-6));
  }
}

TEST_CASE("gap-form identity: qform of the signed weights is -2 gamma") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 40; ++trial) {
    const auto space = random_semimetric_space(6, rng);
    const auto s = random_simplex(6, rng);
    const auto loads = random_normalized_loads(s.q(), s.t(), rng);
    const auto eta = signed_weight_vector(6, s, loads);
    for (double p : {0.0, 0.5, 1.0, 2.0}) {
      const double gamma = gap_value(space, s, loads, p).gamma;
      CHECK(qform(space, p, eta) == Approx(-2.0 * gamma).margin(1e-10));
    }
  }
}

TEST_CASE("gap_value is symmetric under swapping the sides") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 20; ++trial) {
    const auto space = random_semimetric_space(5, rng);
    const auto s = random_simplex(5, rng);
    const auto loads = random_normalized_loads(s.q(), s.t(), rng);
    const Simplex swapped{s.b_side, s.a_side};
    const LoadVector swapped_loads{loads.w, loads.m, true};
    const double p = std::uniform_real_distribution<double>(0.0, 3.0)(rng);
    CHECK(gap_value(space, s, loads, p).gamma ==
          Approx(gap_value(space, swapped, swapped_loads, p).gamma));
  }
}

TEST_CASE("Gamma bounds the quadratic form via inequality on zero-sum vectors") {
  std::mt19937_64 rng(97);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 4; ++trial) {
    const int n = 4 + static_cast<int>(trial % 2);
    const auto space = random_semimetric_space(n, rng);
    for (double p : {0.0, 1.0}) {
      const double gamma = negative_type_gap(space, p).gamma_star;
      for (int probe = 0; probe < 50; ++probe) {
        Eigen::VectorXd eta(n);
        for (int i = 0; i < n; ++i) eta(i) = normal(rng);
        eta.array() -= eta.mean();
        const double norm1 = eta.cwiseAbs().sum();
        const double q = qform(space, p, eta);
        CHECK(q <= -(gamma / 2.0) * norm1 * norm1 + 1e-8);
      }
    }
  }
}

TEST_CASE("gap search is deterministic and thread-count independent") {
  std::mt19937_64 rng(101);
  const auto space = random_semimetric_space(6, rng);
  GapOptions a, b;
  a.seed = b.seed = 5;
  b.threads = 4;
  const auto ra = negative_type_gap(space, 1.3, a);
  const auto rb = negative_type_gap(space, 1.3, b);
  CHECK(ra.gamma_star == rb.gamma_star);
  CHECK(ra.witness_simplex.a_side == rb.witness_simplex.a_side);
  CHECK(ra.witness_simplex.b_side == rb.witness_simplex.b_side);

  const auto again = negative_type_gap(space, 1.3, a);
  CHECK(ra.gamma_star == again.gamma_star);
  CHECK(ra.witness_loads.m == again.witness_loads.m);
}
