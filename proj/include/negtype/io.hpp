#ifndef NEGTYPE_IO_HPP
#define NEGTYPE_IO_HPP

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "negtype/metric_space.hpp"
#include "negtype/trees.hpp"

namespace negtype {

// Space JSON: {"mode":"metric"|"semimetric","labels":[...],"d":[[...],...]}
inline SemiMetricSpace space_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("d"))
    throw FileError("space JSON needs an object with a \"d\" matrix");
  Mode mode = Mode::Metric;
  if (j.contains("mode")) {
    const std::string m = j.at("mode").get<std::string>();
    if (m == "metric")
      mode = Mode::Metric;
    else if (m == "semimetric")
      mode = Mode::SemiMetric;
    else
      throw FileError("unknown mode \"" + m + "\"");
  }
  const auto& rows = j.at("d");
  if (!rows.is_array() || rows.empty())
    throw FileError("\"d\" must be a nonempty array of rows");
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw FileError("row " + std::to_string(i) + " has wrong length");
    for (Eigen::Index k = 0; k < n; ++k) d(i, k) = row[k].get<double>();
  }
  std::vector<std::string> labels;
  if (j.contains("labels"))
    labels = j.at("labels").get<std::vector<std::string>>();
  return build_space(d, mode, std::move(labels));
}

inline nlohmann::json space_to_json(const SemiMetricSpace& space) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < space.n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < space.n; ++j) row.push_back(space.d(i, j));
    rows.push_back(std::move(row));
  }
  nlohmann::json j{{"mode", mode_name(space.mode)}, {"d", std::move(rows)}};
  if (!space.labels.empty()) j["labels"] = space.labels;
  return j;
}

// CSV: square matrix, comma-separated decimals, no header.
inline SemiMetricSpace space_from_csv(std::istream& in, Mode mode) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw FileError("cannot parse CSV cell \"" + cell + "\"");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw FileError("empty CSV input");
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != n)
      throw FileError("CSV row " + std::to_string(i) + " has " +
                      std::to_string(rows[i].size()) + " cells, expected " +
                      std::to_string(n));
    for (Eigen::Index k = 0; k < n; ++k) d(i, k) = rows[i][k];
  }
  return build_space(d, mode);
}

// Tree JSON: {"n":4,"edges":[[0,1,1.0],...]} with 0-based indices.
inline WeightedTree tree_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw FileError("tree JSON needs \"n\" and \"edges\"");
  WeightedTree tree;
  tree.vertex_count = j.at("n").get<int>();
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3)
      throw FileError("each edge must be [u, v, weight]");
    tree.edges.emplace_back(e[0].get<int>(), e[1].get<int>(),
                            e[2].get<double>());
  }
  return tree;
}

inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FileError(path + ": " + e.what());
  }
}

}  // namespace negtype

#endif  // NEGTYPE_IO_HPP
