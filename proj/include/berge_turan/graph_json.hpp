#pragma once

#include <string>

#include "berge_turan/error.hpp"
#include "berge_turan/graph.hpp"
#include "json.hpp"

namespace berge_turan {

/// {"n": int, "edges": [[u, v], ...]} with edges in lexicographic order.
inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 0 || n > Graph::kMaxVertices) throw InvalidInput("graph order out of range: " + std::to_string(n));
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidInput("edge must be a pair: " + e.dump());
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edges(n, edges);
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInput(std::string("malformed graph JSON: ") + ex.what());
  }
}

inline Graph graph_from_json_text(const std::string& text) {
  try {
    return graph_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& ex) {
    throw InvalidInput(std::string("graph JSON parse error: ") + ex.what());
  }
}

}  // namespace berge_turan
