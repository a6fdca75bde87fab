#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "berge_turan/graph.hpp"

namespace berge_turan {

/// Injective map from pattern vertices to host vertices preserving adjacency
/// (not necessarily induced). embedding[p] is the host image of p.
using Embedding = std::vector<int>;

namespace detail {

// Pattern vertices ordered so each one (after the first of its component)
// has as many already-placed neighbors as possible; ties go to higher degree.
inline std::vector<int> pattern_order(const Graph& pattern, int first = -1) {
  const int m = pattern.order();
  std::vector<int> order;
  VertexMask placed = 0;
  if (first >= 0) {
    order.push_back(first);
    placed |= bit(first);
  }
  while (static_cast<int>(order.size()) < m) {
    int best = -1;
    int best_links = -1;
    int best_deg = -1;
    for (int p = 0; p < m; ++p) {
      if (placed & bit(p)) continue;
      const int links = popcount(pattern.neighbors(p) & placed);
      const int deg = pattern.degree(p);
      if (links > best_links || (links == best_links && deg > best_deg)) {
        best = p;
        best_links = links;
        best_deg = deg;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }
  return order;
}

class SubgraphMatcher {
 public:
  SubgraphMatcher(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern) {}

  // `domains[p]` restricts the images of pattern vertex p.
  std::optional<Embedding> find(const std::vector<int>& order, std::vector<VertexMask> domains) {
    const int m = pattern_.order();
    if (m > host_.order()) return std::nullopt;
    for (int p = 0; p < m; ++p) {
      VertexMask ok = 0;
      for_each_vertex(domains[p] & host_.all_vertices(), [&](int x) {
        if (host_.degree(x) >= pattern_.degree(p)) ok |= bit(x);
      });
      domains[p] = ok;
      if (ok == 0) return std::nullopt;
    }
    order_ = order;
    image_.assign(static_cast<std::size_t>(m), -1);
    if (recurse(0, domains, 0)) return image_;
    return std::nullopt;
  }

 private:
  bool recurse(std::size_t depth, const std::vector<VertexMask>& domains, VertexMask used) {
    if (depth == order_.size()) return true;
    const int p = order_[depth];
    VertexMask cand = domains[p] & ~used;
    while (cand != 0) {
      const int x = lowest_vertex(cand);
      cand &= cand - 1;
      // Forward check: every unplaced pattern neighbor keeps a candidate.
      std::vector<VertexMask> next = domains;
      bool viable = true;
      for_each_vertex(pattern_.neighbors(p), [&](int q) {
        if (!viable || image_[q] >= 0) return;
        next[q] &= host_.neighbors(x);
        if ((next[q] & ~(used | bit(x))) == 0) viable = false;
      });
      if (!viable) continue;
      image_[p] = x;
      if (recurse(depth + 1, next, used | bit(x))) return true;
      image_[p] = -1;
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<int> order_;
  Embedding image_;
};

}  // namespace detail

/// Finds a copy of `pattern` in `host` (as a subgraph, not necessarily induced).
inline std::optional<Embedding> find_subgraph(const Graph& host, const Graph& pattern) {
  if (pattern.order() == 0) return Embedding{};
  detail::SubgraphMatcher matcher(host, pattern);
  std::vector<VertexMask> domains(static_cast<std::size_t>(pattern.order()), host.all_vertices());
  return matcher.find(detail::pattern_order(pattern), std::move(domains));
}

inline bool contains_subgraph(const Graph& host, const Graph& pattern) {
  return find_subgraph(host, pattern).has_value();
}

/// Finds a copy of `pattern` whose image contains host vertex `v`.
inline std::optional<Embedding> find_subgraph_through(const Graph& host, const Graph& pattern, int v) {
  if (pattern.order() == 0) return std::nullopt;
  detail::SubgraphMatcher matcher(host, pattern);
  for (int p = 0; p < pattern.order(); ++p) {
    if (pattern.degree(p) > host.degree(v)) continue;
    std::vector<VertexMask> domains(static_cast<std::size_t>(pattern.order()), host.all_vertices() & ~bit(v));
    domains[p] = bit(v);
    if (auto e = matcher.find(detail::pattern_order(pattern, p), std::move(domains))) return e;
  }
  return std::nullopt;
}

inline bool contains_subgraph_through(const Graph& host, const Graph& pattern, int v) {
  return find_subgraph_through(host, pattern, v).has_value();
}

/// Re-checks an embedding: injective, in range, and edge preserving.
inline bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
  if (static_cast<int>(e.size()) != pattern.order()) return false;
  VertexMask seen = 0;
  for (int x : e) {
    if (x < 0 || x >= host.order() || (seen & bit(x))) return false;
    seen |= bit(x);
  }
  const auto edges = pattern.edges();
  return std::all_of(edges.begin(), edges.end(), [&](const Edge& uv) { return host.adjacent(e[uv.first], e[uv.second]); });
}

}  // namespace berge_turan
