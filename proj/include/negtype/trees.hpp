#ifndef NEGTYPE_TREES_HPP
#define NEGTYPE_TREES_HPP

#include <array>
#include <tuple>
#include <vector>

#include "negtype/metric_space.hpp"

namespace negtype {

struct WeightedTree {
  int vertex_count = 0;
  std::vector<std::tuple<int, int, double>> edges;  // (u, v, weight > 0)
};

namespace detail {

inline std::vector<std::vector<std::pair<int, double>>> tree_adjacency(
    const WeightedTree& tree) {
  const int n = tree.vertex_count;
  if (static_cast<int>(tree.edges.size()) != n - 1)
    throw NotATree("a tree on " + std::to_string(n) + " vertices has " +
                   std::to_string(n - 1) + " edges, got " +
                   std::to_string(tree.edges.size()));
  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (const auto& [u, v, w] : tree.edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw NotATree("edge endpoint out of range");
    if (u == v) throw NotATree("self-loop at vertex " + std::to_string(u));
    if (w <= 0.0)
      throw NonpositiveWeight("edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ") has weight " +
                              std::to_string(w));
    adj[u].emplace_back(v, w);
    adj[v].emplace_back(u, w);
  }
  // n-1 edges plus connectivity rules out cycles.
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (const auto& [v, w] : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
        ++visited;
      }
  }
  if (visited != n)
    throw NotATree("vertex set is disconnected (" + std::to_string(n - visited) +
                   " vertices unreachable from vertex 0)");
  return adj;
}

}  // namespace detail

// Path metric of an edge-weighted tree: depth-first traversal from each
// root, distances accumulated along the unique paths.
inline SemiMetricSpace tree_metric(const WeightedTree& tree) {
  const int n = tree.vertex_count;
  if (n < 1) throw NotATree("empty vertex set");
  const auto adj = detail::tree_adjacency(tree);

  // Fill the upper triangle from each root and mirror it, so both
  // orientations of a path share one floating-point sum.
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int root = 0; root < n; ++root) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& [v, w] : adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          d(root, v) = d(root, u) + w;
          stack.push_back(v);
        }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d(j, i) = d(i, j);
  return build_space(d, Mode::Metric);
}

// The 1-negative type gap of a finite metric tree: reciprocal of the sum
// of reciprocal edge weights.
inline double tree_one_gap(const WeightedTree& tree) {
  if (tree.vertex_count < 2) throw TooFewPoints("tree_one_gap needs n >= 2");
  detail::tree_adjacency(tree);  // validates
  double sum = 0.0;
  for (const auto& [u, v, w] : tree.edges) sum += 1.0 / w;
  return 1.0 / sum;
}

}  // namespace negtype

#endif  // NEGTYPE_TREES_HPP
