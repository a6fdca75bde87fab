#pragma once

#include <algorithm>
#include <vector>

#include "berge_turan/blue_red.hpp"
#include "berge_turan/cliques.hpp"
#include "berge_turan/graph.hpp"
#include "berge_turan/hypergraph.hpp"

namespace berge_turan {

/// Best blue/red split of a fixed graph for g.
struct ColoringOptimum {
  Count value = 0;
  BlueRedGraph coloring;
  Count nodes = 0;
};

/// Maximizes g over all red subsets of E(g) by branch-and-bound.
///
/// Edges in no k-clique are always red. The remaining edges are decided one
/// at a time; the bound charges every still-possible clique to its first
/// undecided edge, and that edge contributes max(1, charged cliques).
inline ColoringOptimum best_coloring(const Graph& g, int k) {
  if (k < 3) throw InvalidParameter("g is defined for k >= 3");
  const auto edges = g.edges();
  if (edges.size() > 64) throw CapExceeded("colored optimization supports at most 64 edges");
  std::vector<int> edge_id(static_cast<std::size_t>(g.order() * g.order()), -1);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    edge_id[edges[i].first * g.order() + edges[i].second] = i;
    edge_id[edges[i].second * g.order() + edges[i].first] = i;
  }

  std::vector<VertexMask> cliques;  // edge-index masks
  VertexMask in_clique = 0;
  for_each_clique(g, k, [&](VertexMask c) {
    VertexMask em = 0;
    const auto vs = vertices_of(c);
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b) em |= bit(edge_id[vs[a] * g.order() + vs[b]]);
    cliques.push_back(em);
    in_clique |= em;
  });

  // Decision order: edges by descending clique membership, then index.
  std::vector<int> order;
  for_each_vertex(in_clique, [&](int e) { order.push_back(e); });
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    auto cnt = [&](int e) { return std::count_if(cliques.begin(), cliques.end(), [&](VertexMask c) { return (c >> e) & 1U; }); };
    return cnt(a) > cnt(b);
  });
  std::vector<int> position(64, -1);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);

  const Count free_red = static_cast<Count>(popcount(~in_clique & prefix_mask(static_cast<int>(edges.size()))));
  const Count contested = order.size();
  const Count all_blue = cliques.size();

  Count best = std::max(contested, all_blue);
  VertexMask best_red = contested >= all_blue ? in_clique : 0;
  Count nodes = 0;

  VertexMask red = 0;
  VertexMask decided = 0;
  auto bound = [&](std::size_t depth, Count red_count) {
    std::vector<Count> charge(order.size(), 0);
    Count complete = 0;
    for (VertexMask c : cliques) {
      if (c & red) continue;
      const VertexMask open = c & ~decided;
      if (open == 0) {
        ++complete;
        continue;
      }
      int first = static_cast<int>(order.size());
      for_each_vertex(open, [&](int e) { first = std::min(first, position[e]); });
      ++charge[static_cast<std::size_t>(first)];
    }
    Count total = red_count + complete;
    for (std::size_t i = depth; i < order.size(); ++i) total += std::max<Count>(1, charge[i]);
    return total;
  };

  auto rec = [&](auto&& self, std::size_t depth, Count red_count) -> void {
    ++nodes;
    if (depth == order.size()) {
      Count complete = 0;
      for (VertexMask c : cliques)
        if ((c & red) == 0) ++complete;
      const Count value = red_count + complete;
      if (value > best) {
        best = value;
        best_red = red;
      }
      return;
    }
    if (bound(depth, red_count) <= best) return;
    const int e = order[depth];
    decided |= bit(e);
    self(self, depth + 1, red_count);  // blue
    red |= bit(e);
    self(self, depth + 1, red_count + 1);  // red
    red &= ~bit(e);
    decided &= ~bit(e);
  };
  rec(rec, 0, 0);

  Graph red_graph(g.order());
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (!((in_clique >> i) & 1U) || ((best_red >> i) & 1U)) red_graph.add_edge(edges[i].first, edges[i].second);
  }
  return {free_red + best, BlueRedGraph(g, std::move(red_graph)), nodes};
}

}  // namespace berge_turan
