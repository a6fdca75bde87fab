#pragma once

#include <vector>

#include "berge_turan/cliques.hpp"
#include "berge_turan/error.hpp"
#include "berge_turan/graph.hpp"

namespace berge_turan {

/// A graph whose edges are colored blue or red. `red` holds the red edges
/// and is always a subgraph of `graph`; every other edge is blue.
class BlueRedGraph {
 public:
  BlueRedGraph() = default;
  explicit BlueRedGraph(Graph graph) : graph_(std::move(graph)), red_(graph_.order()) {}
  BlueRedGraph(Graph graph, Graph red) : graph_(std::move(graph)), red_(std::move(red)) {
    if (red_.order() != graph_.order()) throw InvalidInput("red subgraph has a different order");
    for (const auto& [u, v] : red_.edges()) {
      if (!graph_.adjacent(u, v)) throw InvalidInput("red edge is not an edge of the graph");
    }
  }

  [[nodiscard]] int order() const noexcept { return graph_.order(); }
  [[nodiscard]] const Graph& graph() const noexcept { return graph_; }
  [[nodiscard]] const Graph& red() const noexcept { return red_; }

  [[nodiscard]] Graph blue() const {
    Graph b = graph_;
    for (const auto& [u, v] : red_.edges()) b.remove_edge(u, v);
    return b;
  }

  [[nodiscard]] bool is_red(int u, int v) const { return red_.adjacent(u, v); }

  void add_blue(int u, int v) {
    graph_.add_edge(u, v);
    red_.remove_edge(u, v);
  }

  void add_red(int u, int v) {
    graph_.add_edge(u, v);
    red_.add_edge(u, v);
  }

  void remove_edge(int u, int v) {
    graph_.remove_edge(u, v);
    red_.remove_edge(u, v);
  }

  void isolate(int v) {
    graph_.isolate(v);
    red_.isolate(v);
  }

  [[nodiscard]] BlueRedGraph relabeled(std::span<const int> new_label) const {
    return {graph_.relabeled(new_label), red_.relabeled(new_label)};
  }

  friend bool operator==(const BlueRedGraph&, const BlueRedGraph&) = default;

 private:
  Graph graph_;
  Graph red_;
};

/// g(G) = number of k-cliques of the blue graph plus number of red edges.
inline Count g_value(const BlueRedGraph& g, int k) {
  if (k < 3) throw InvalidParameter("g is defined for k >= 3");
  return checked_add(count_cliques(g.blue(), k), static_cast<Count>(g.red().size()));
}

}  // namespace berge_turan
