#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace negtype;
using namespace negtype::testing;
using Catch::Approx;

TEST_CASE("tree_metric") {
  const WeightedTree edge{2, {{0, 1, 3.0}}};
  CHECK(tree_metric(edge).d(0, 1) == 3.0);

  const WeightedTree path{3, {{0, 1, 1.0}, {1, 2, 2.0}}};
  const auto pm = tree_metric(path);
  CHECK(pm.d(0, 2) == Approx(3.0));
  CHECK(pm.mode == Mode::Metric);

  const WeightedTree star{4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}}};
  const auto sm = tree_metric(star);
  CHECK(sm.d(0, 1) == 1.0);
  CHECK(sm.d(1, 2) == 2.0);
  CHECK(sm.d(2, 3) == 2.0);
}

TEST_CASE("tree validation") {
  // wrong edge count
  CHECK_THROWS_AS(
      tree_metric(WeightedTree{3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}}),
      NotATree);
  // n-1 edges but disconnected (cycle plus isolated vertex)
  CHECK_THROWS_AS(
      tree_metric(WeightedTree{4, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}}),
      NotATree);
  CHECK_THROWS_AS(tree_metric(WeightedTree{2, {{0, 0, 1.0}}}), NotATree);
  CHECK_THROWS_AS(tree_metric(WeightedTree{2, {{0, 5, 1.0}}}), NotATree);
  CHECK_THROWS_AS(tree_metric(WeightedTree{2, {{0, 1, -1.0}}}),
                  NonpositiveWeight);
}

TEST_CASE("tree_one_gap") {
  const WeightedTree star{4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}}};
  CHECK(tree_one_gap(star) == Approx(1.0 / 3));

  const WeightedTree path{3, {{0, 1, 1.0}, {1, 2, 2.0}}};
  CHECK(tree_one_gap(path) == Approx(2.0 / 3));

  const WeightedTree edge{2, {{0, 1, 2.5}}};
  CHECK(tree_one_gap(edge) == Approx(2.5));

  CHECK_THROWS_AS(tree_one_gap(WeightedTree{1, {}}), TooFewPoints);
}

TEST_CASE("tree gap formula matches enumeration on random trees") {
  std::mt19937_64 rng(29);
  GapOptions opts;
  opts.threads = 4;
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 3 + trial;
    const auto tree = random_tree(n, rng);
    const auto space = tree_metric(tree);
    CHECK(tree_one_gap(tree) > 0.0);
    CHECK(check_strict_negative_type(space, 1.0).holds);
    const auto enumerated = negative_type_gap(space, 1.0, opts);
    CHECK(std::abs(tree_one_gap(tree) - enumerated.gamma_star) <= 1e-4);
  }
}
