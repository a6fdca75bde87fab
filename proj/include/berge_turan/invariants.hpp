#pragma once

#include <algorithm>
#include <vector>

#include "berge_turan/error.hpp"
#include "berge_turan/graph.hpp"

namespace berge_turan {

struct ChromaticProfile {
  int chi = 0;
  int sigma = 0;
  std::vector<Edge> critical_edges;
  std::vector<int> critical_vertices;

  [[nodiscard]] bool has_critical_vertex() const { return !critical_vertices.empty(); }
  [[nodiscard]] bool has_critical_edge() const { return !critical_edges.empty(); }
};

inline constexpr int kSigmaMaxVertices = 12;

namespace detail {

inline int max_clique_size(const Graph& g, VertexMask cand, int size, int best) {
  if (cand == 0) return std::max(size, best);
  while (cand != 0) {
    if (size + popcount(cand) <= best) return best;
    const int v = lowest_vertex(cand);
    cand &= ~bit(v);
    best = max_clique_size(g, cand & g.neighbors(v), size + 1, best);
  }
  return std::max(size, best);
}

// DSATUR greedy coloring; returns the number of colors used.
inline int greedy_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  int used = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      std::uint64_t seen = 0;
      for_each_vertex(g.neighbors(v), [&](int w) {
        if (color[w] >= 0) seen |= std::uint64_t{1} << color[w];
      });
      const int sat = popcount(seen);
      if (sat > pick_sat || (sat == pick_sat && g.degree(v) > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = g.degree(v);
      }
    }
    std::uint64_t seen = 0;
    for_each_vertex(g.neighbors(pick), [&](int w) {
      if (color[w] >= 0) seen |= std::uint64_t{1} << color[w];
    });
    const int c = std::countr_one(seen);
    color[pick] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

// Zykov tree: chi(G) = min(chi(G / uv), chi(G + uv)) for a non-adjacent pair.
inline void zykov_branch(const Graph& g, int& best) {
  const int lower = max_clique_size(g, g.all_vertices(), 0, 0);
  if (lower >= best) return;
  const int upper = greedy_colors(g);
  if (upper < best) best = upper;
  if (lower >= best) return;

  // Non-adjacent pair with the most common neighbors.
  int bu = -1;
  int bv = -1;
  int common = -1;
  for (int u = 0; u < g.order(); ++u) {
    for_each_vertex(g.all_vertices() & ~g.neighbors(u) & ~prefix_mask(u + 1), [&](int v) {
      const int c = popcount(g.neighbors(u) & g.neighbors(v));
      if (c > common) {
        common = c;
        bu = u;
        bv = v;
      }
    });
  }
  if (bu < 0) return;  // complete graph: greedy is exact

  Graph merged = g;
  for_each_vertex(g.neighbors(bv), [&](int w) { merged.add_edge(bu, w); });
  zykov_branch(merged.without_vertex(bv), best);

  Graph linked = g;
  linked.add_edge(bu, bv);
  zykov_branch(linked, best);
}

}  // namespace detail

/// Exact chromatic number by branch-and-bound over the Zykov tree.
inline int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  int best = g.order() + 1;
  detail::zykov_branch(g, best);
  return best;
}

/// Smallest color class over all proper colorings with exactly chi(g) colors.
inline int sigma(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw InvalidInput("sigma is undefined for the empty graph");
  if (n > kSigmaMaxVertices) throw CapExceeded("sigma is computed only for graphs with at most 12 vertices");
  const int chi = chromatic_number(g);

  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> class_size(static_cast<std::size_t>(chi), 0);
  int best = n;

  // Colors are introduced in order (vertex v may open color max+1 only),
  // which enumerates each partition into classes once.
  auto rec = [&](auto&& self, int v, int opened) -> void {
    if (n - v < chi - opened) return;
    if (v == n) {
      best = std::min(best, *std::min_element(class_size.begin(), class_size.end()));
      return;
    }
    for (int c = 0; c < std::min(opened + 1, chi); ++c) {
      bool ok = true;
      for_each_vertex(g.neighbors(v) & prefix_mask(v), [&](int w) { ok = ok && color[w] != c; });
      if (!ok) continue;
      color[v] = c;
      ++class_size[c];
      self(self, v + 1, std::max(opened, c + 1));
      --class_size[c];
      color[v] = -1;
    }
  };
  rec(rec, 0, 0);
  return best;
}

inline ChromaticProfile chromatic_profile(const Graph& g) {
  if (g.order() == 0) throw InvalidInput("chromatic profile is undefined for the empty graph");
  ChromaticProfile out;
  out.chi = chromatic_number(g);
  out.sigma = sigma(g);
  for (const auto& [u, v] : g.edges()) {
    if (chromatic_number(g.without_edge(u, v)) < out.chi) out.critical_edges.emplace_back(u, v);
  }
  for (int v = 0; v < g.order(); ++v) {
    if (chromatic_number(g.without_vertex(v)) < out.chi) out.critical_vertices.push_back(v);
  }
  return out;
}

}  // namespace berge_turan
