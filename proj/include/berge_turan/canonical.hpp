#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "berge_turan/graph.hpp"
#include "berge_turan/graph6.hpp"

namespace berge_turan {

/// Canonical labeling of a (optionally vertex-colored) graph.
///
/// `label[v]` is the canonical position of vertex v. `certificate` is equal
/// for two inputs iff they are isomorphic (respecting colors); for uncolored
/// graphs it is the graph6 string of the canonically relabeled graph.
struct CanonicalForm {
  std::vector<int> label;
  std::string certificate;
  /// Automorphisms discovered during the search (generators of a subgroup
  /// of Aut(G)); entry p maps v to p[v].
  std::vector<std::vector<int>> automorphisms;
};

namespace detail {

// Upper triangle in graph6 bit order, most significant bit first, so that
// comparing word vectors compares the bit strings lexicographically.
class AdjacencyCode {
 public:
  AdjacencyCode() = default;
  AdjacencyCode(const Graph& g, std::span<const int> order) {
    const int n = g.order();
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    words_.assign((bits + 63) / 64, 0);
    std::size_t t = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++t) {
        if (g.adjacent(order[i], order[j])) words_[t / 64] |= VertexMask{1} << (63 - t % 64);
      }
    }
  }
  friend auto operator<=>(const AdjacencyCode&, const AdjacencyCode&) = default;
  friend bool operator==(const AdjacencyCode&, const AdjacencyCode&) = default;

 private:
  std::vector<VertexMask> words_;
};

using OrderedPartition = std::vector<VertexMask>;

// Splits cells by neighbor counts into each splitter cell until the
// partition is equitable. Only cell order and counts drive the splits, so the
// result commutes with relabeling.
inline void refine(const Graph& g, OrderedPartition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      const VertexMask splitter = cells[s];
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (popcount(cells[c]) < 2) continue;
        // Bucket vertices by their count into the splitter.
        std::vector<std::pair<int, VertexMask>> buckets;
        for_each_vertex(cells[c], [&](int v) {
          const int cnt = popcount(g.neighbors(v) & splitter);
          auto it = std::find_if(buckets.begin(), buckets.end(), [&](const auto& b) { return b.first == cnt; });
          if (it == buckets.end())
            buckets.emplace_back(cnt, bit(v));
          else
            it->second |= bit(v);
        });
        if (buckets.size() < 2) continue;
        std::sort(buckets.begin(), buckets.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        OrderedPartition replacement;
        for (const auto& b : buckets) replacement.push_back(b.second);
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), replacement.begin(), replacement.end());
        changed = true;
        c += replacement.size() - 1;
      }
    }
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  CanonicalForm run(OrderedPartition cells) {
    refine(g_, cells);
    std::vector<int> prefix;
    descend(cells, prefix);
    CanonicalForm out;
    out.label.assign(static_cast<std::size_t>(g_.order()), 0);
    for (int pos = 0; pos < g_.order(); ++pos) out.label[best_order_[pos]] = pos;
    out.automorphisms = std::move(automorphisms_);
    return out;
  }

  [[nodiscard]] const std::vector<int>& best_order() const { return best_order_; }

 private:
  static constexpr std::size_t kMaxStoredAutomorphisms = 128;

  // Returns the depth to unwind to after discovering an automorphism (the
  // node where the new leaf's path left the best leaf's path), or -1.
  int descend(const OrderedPartition& cells, std::vector<int>& prefix) {
    auto target = std::find_if(cells.begin(), cells.end(), [](VertexMask c) { return popcount(c) > 1; });
    if (target == cells.end()) return visit_leaf(cells, prefix);
    const int depth = static_cast<int>(prefix.size());
    const auto target_index = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> explored;
    VertexMask todo = *target;
    while (todo != 0) {
      const int v = lowest_vertex(todo);
      todo &= todo - 1;
      if (!explored.empty() && same_orbit_as_any(v, explored, prefix)) continue;
      explored.push_back(v);
      OrderedPartition child = cells;
      child[target_index] &= ~bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target_index), bit(v));
      refine(g_, child);
      prefix.push_back(v);
      const int unwind = descend(child, prefix);
      prefix.pop_back();
      if (unwind >= 0 && unwind < depth) return unwind;
    }
    return -1;
  }

  // Vertices keep their flat position across refinements, so a leaf whose
  // code equals the best one yields an automorphism that fixes the common
  // path prefix and maps one branch at the divergence node onto the other.
  // The rest of the current branch is then redundant.
  int visit_leaf(const OrderedPartition& cells, const std::vector<int>& path) {
    std::vector<int> order;
    order.reserve(cells.size());
    for (VertexMask c : cells) order.push_back(lowest_vertex(c));
    AdjacencyCode code(g_, order);
    if (best_order_.empty() || code < best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
      best_path_ = path;
      return -1;
    }
    if (code != best_code_) return -1;
    if (automorphisms_.size() < kMaxStoredAutomorphisms) {
      // order[pos] and best_order_[pos] play the same role.
      std::vector<int> perm(static_cast<std::size_t>(g_.order()));
      for (std::size_t pos = 0; pos < order.size(); ++pos) perm[order[pos]] = best_order_[pos];
      automorphisms_.push_back(std::move(perm));
    }
    std::size_t common = 0;
    while (common < path.size() && common < best_path_.size() && path[common] == best_path_[common]) ++common;
    return static_cast<int>(common);
  }

  // Orbit test under the stored automorphisms that fix `prefix` pointwise.
  bool same_orbit_as_any(int v, const std::vector<int>& explored, const std::vector<int>& prefix) const {
    const int n = g_.order();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& perm : automorphisms_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return perm[p] == p; });
      if (!fixes) continue;
      for (int x = 0; x < n; ++x) parent[find(x)] = find(perm[x]);
    }
    const int root = find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int u) { return find(u) == root; });
  }

  const Graph& g_;
  AdjacencyCode best_code_;
  std::vector<int> best_order_;
  std::vector<int> best_path_;
  std::vector<std::vector<int>> automorphisms_;
};

inline OrderedPartition partition_from_colors(int n, std::span<const int> colors) {
  std::vector<int> distinct(colors.begin(), colors.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  OrderedPartition cells(distinct.size(), 0);
  for (int v = 0; v < n; ++v) {
    const auto idx = std::lower_bound(distinct.begin(), distinct.end(), colors[v]) - distinct.begin();
    cells[static_cast<std::size_t>(idx)] |= bit(v);
  }
  return cells;
}

}  // namespace detail

/// Canonical form of a graph whose vertices carry integer colors; an
/// isomorphism must map each vertex to one of equal color.
inline CanonicalForm canonical_form(const Graph& g, std::span<const int> colors) {
  if (static_cast<int>(colors.size()) != g.order()) throw InvalidParameter("one color per vertex required");
  detail::OrderedPartition cells = g.order() == 0 ? detail::OrderedPartition{} : detail::partition_from_colors(g.order(), colors);
  detail::CanonicalSearch search(g);
  CanonicalForm out = search.run(std::move(cells));
  out.certificate = graph6_encode(g.relabeled(out.label));
  out.certificate.push_back('|');
  for (int v : search.best_order()) out.certificate += std::to_string(colors[v]) + ",";
  return out;
}

inline CanonicalForm canonical_form(const Graph& g) {
  detail::OrderedPartition cells;
  if (g.order() > 0) cells.push_back(g.all_vertices());
  detail::CanonicalSearch search(g);
  CanonicalForm out = search.run(std::move(cells));
  out.certificate = graph6_encode(g.relabeled(out.label));
  return out;
}

inline std::string certificate(const Graph& g) { return canonical_form(g).certificate; }

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && certificate(a) == certificate(b);
}

/// True iff some automorphism of g maps a to b.
inline bool same_orbit(const Graph& g, int a, int b) {
  if (a == b) return true;
  if (g.degree(a) != g.degree(b)) return false;
  std::vector<int> colors(static_cast<std::size_t>(g.order()), 1);
  colors[static_cast<std::size_t>(a)] = 0;
  const std::string ca = canonical_form(g, colors).certificate;
  colors[static_cast<std::size_t>(a)] = 1;
  colors[static_cast<std::size_t>(b)] = 0;
  return ca == canonical_form(g, colors).certificate;
}

}  // namespace berge_turan
