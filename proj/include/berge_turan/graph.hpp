#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "berge_turan/error.hpp"

namespace berge_turan {

using VertexMask = std::uint64_t;

inline constexpr int popcount(VertexMask m) noexcept { return std::popcount(m); }
inline constexpr int lowest_vertex(VertexMask m) noexcept { return std::countr_zero(m); }
inline constexpr VertexMask bit(int v) noexcept { return VertexMask{1} << v; }
inline constexpr VertexMask prefix_mask(int n) noexcept {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

/// Iterate the set bits of a mask in increasing order.
template <typename Fn>
inline void for_each_vertex(VertexMask m, Fn&& fn) {
  while (m != 0) {
    const int v = lowest_vertex(m);
    m &= m - 1;
    fn(v);
  }
}

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with one adjacency word per
/// vertex, so n is limited to 64.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  explicit Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices) {
      throw InvalidParameter("graph order must be in [0, 64], got " + std::to_string(n));
    }
  }

  /// Builds a graph from an edge list, rejecting loops and out-of-range
  /// endpoints. Repeated edges collapse.
  static Graph from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw InvalidInput("edge endpoint out of range: (" + std::to_string(u) + "," +
                           std::to_string(v) + ") with n = " + std::to_string(n));
      }
      if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
      g.add_edge(u, v);
    }
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  [[nodiscard]] int order() const noexcept { return n_; }

  [[nodiscard]] int size() const noexcept {
    int twice = 0;
    for (VertexMask row : rows_) twice += popcount(row);
    return twice / 2;
  }

  [[nodiscard]] VertexMask all_vertices() const noexcept { return prefix_mask(n_); }
  [[nodiscard]] VertexMask neighbors(int v) const noexcept { return rows_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] int degree(int v) const noexcept { return popcount(neighbors(v)); }
  [[nodiscard]] bool adjacent(int u, int v) const noexcept { return (neighbors(u) >> v) & 1U; }

  void add_edge(int u, int v) noexcept {
    rows_[static_cast<std::size_t>(u)] |= bit(v);
    rows_[static_cast<std::size_t>(v)] |= bit(u);
  }

  void remove_edge(int u, int v) noexcept {
    rows_[static_cast<std::size_t>(u)] &= ~bit(v);
    rows_[static_cast<std::size_t>(v)] &= ~bit(u);
  }

  /// Removes every edge at v; v stays as an isolated vertex.
  void isolate(int v) noexcept {
    for_each_vertex(neighbors(v), [&](int w) { rows_[static_cast<std::size_t>(w)] &= ~bit(v); });
    rows_[static_cast<std::size_t>(v)] = 0;
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
      for_each_vertex(neighbors(u) & ~prefix_mask(u + 1), [&](int v) { out.emplace_back(u, v); });
    }
    return out;
  }

  /// Graph with vertex v renamed to new_label[v].
  [[nodiscard]] Graph relabeled(std::span<const int> new_label) const {
    Graph g(n_);
    for (const auto& [u, v] : edges()) g.add_edge(new_label[u], new_label[v]);
    return g;
  }

  /// Subgraph induced by the vertices of `keep`, renumbered in increasing order.
  [[nodiscard]] Graph induced(VertexMask keep) const {
    std::vector<int> index(static_cast<std::size_t>(n_), -1);
    int m = 0;
    for_each_vertex(keep & all_vertices(), [&](int v) { index[static_cast<std::size_t>(v)] = m++; });
    Graph g(m);
    for (const auto& [u, v] : edges()) {
      if (index[u] >= 0 && index[v] >= 0) g.add_edge(index[u], index[v]);
    }
    return g;
  }

  [[nodiscard]] Graph without_vertex(int v) const { return induced(all_vertices() & ~bit(v)); }

  [[nodiscard]] Graph without_edge(int u, int v) const {
    Graph g = *this;
    g.remove_edge(u, v);
    return g;
  }

  /// Adds a new vertex n adjacent to exactly the vertices in `nbrs`.
  [[nodiscard]] Graph with_vertex(VertexMask nbrs) const {
    Graph g(n_ + 1);
    g.rows_.assign(rows_.begin(), rows_.end());
    g.rows_.push_back(0);
    for_each_vertex(nbrs & all_vertices(), [&](int w) { g.add_edge(n_, w); });
    return g;
  }

  [[nodiscard]] Graph complement() const {
    Graph g(n_);
    for (int v = 0; v < n_; ++v) g.rows_[static_cast<std::size_t>(v)] = all_vertices() & ~neighbors(v) & ~bit(v);
    return g;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexMask> rows_;
};

// ---------------------------------------------------------------------------
// Named constructions

inline Graph complete_graph(int m) {
  Graph g(m);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
  return g;
}

inline Graph empty_graph(int m) { return Graph(m); }

inline Graph path_graph(int m) {
  Graph g(m);
  for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int m) {
  if (m < 3) throw InvalidParameter("cycle needs at least 3 vertices");
  Graph g = path_graph(m);
  g.add_edge(m - 1, 0);
  return g;
}

inline Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

/// Part index of vertex v in the round-robin balanced r-partition.
inline constexpr int turan_part(int v, int r) noexcept { return v % r; }

/// Complete balanced r-partite graph T(n, r); vertex v lies in part v mod r.
inline Graph turan_graph(int n, int r) {
  if (r < 1) throw InvalidParameter("turan_graph requires r >= 1");
  if (n < 0) throw InvalidParameter("turan_graph requires n >= 0");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (turan_part(u, r) != turan_part(v, r)) g.add_edge(u, v);
  return g;
}

/// K_i + T(n - i, r): vertices 0..i-1 are apexes joined to everything, the
/// rest carry T(n - i, r).
inline Graph join_turan(int i, int n, int r) {
  if (r < 1) throw InvalidParameter("join_turan requires r >= 1");
  if (i < 0 || i > n) throw InvalidParameter("join_turan requires 0 <= i <= n");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (u < i || turan_part(u - i, r) != turan_part(v - i, r)) g.add_edge(u, v);
    }
  }
  return g;
}

/// Vertex-disjoint union; the parts are laid out in order.
inline Graph disjoint_union(std::span<const Graph> parts) {
  int total = 0;
  for (const auto& p : parts) total += p.order();
  Graph g(total);
  int offset = 0;
  for (const auto& p : parts) {
    for (const auto& [u, v] : p.edges()) g.add_edge(offset + u, offset + v);
    offset += p.order();
  }
  return g;
}

/// B_{r,1}: two copies of K_{r+1} sharing exactly one vertex (vertex 0).
inline Graph book_graph(int r) {
  if (r < 1) throw InvalidParameter("book graph requires r >= 1");
  Graph g(2 * r + 1);
  for (int side = 0; side < 2; ++side) {
    std::vector<int> clique{0};
    for (int j = 0; j < r; ++j) clique.push_back(1 + side * r + j);
    for (std::size_t a = 0; a < clique.size(); ++a)
      for (std::size_t b = a + 1; b < clique.size(); ++b) g.add_edge(clique[a], clique[b]);
  }
  return g;
}

/// 2K_{r+1}: two vertex-disjoint copies of K_{r+1}.
inline Graph two_cliques(int r) {
  if (r < 1) throw InvalidParameter("two_cliques requires r >= 1");
  const Graph k = complete_graph(r + 1);
  const std::vector<Graph> parts{k, k};
  return disjoint_union(parts);
}

}  // namespace berge_turan
