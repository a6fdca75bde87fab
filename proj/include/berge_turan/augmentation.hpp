#pragma once

#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "berge_turan/canonical.hpp"
#include "berge_turan/graph.hpp"
#include "berge_turan/subgraph.hpp"

namespace berge_turan {

/// A graph together with its canonical form.
struct LabeledClass {
  Graph graph;
  CanonicalForm form;
};

namespace detail {

// The new vertex must share an Aut(child)-orbit with the vertex that has the
// largest canonical label.
inline bool is_canonical_extension(const Graph& child, const CanonicalForm& cf) {
  const int last = child.order() - 1;
  const int target = static_cast<int>(std::find(cf.label.begin(), cf.label.end(), last) - cf.label.begin());
  if (target == last) return true;
  if (child.degree(target) != child.degree(last)) return false;
  std::vector<int> parent(static_cast<std::size_t>(child.order()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& perm : cf.automorphisms)
    for (int x = 0; x < child.order(); ++x) parent[find(x)] = find(perm[x]);
  if (find(target) == find(last)) return true;
  return same_orbit(child, target, last);
}

}  // namespace detail

/// One-vertex extensions of `parent` that are F-free, one per isomorphism
/// class among those whose canonical parent is `parent`'s class. Applied
/// level by level from the empty graph this yields every F-free graph
/// exactly once up to isomorphism. `parent` must itself be F-free.
inline std::vector<LabeledClass> augment(const Graph& parent, const Graph& forbidden) {
  const int m = parent.order();
  if (m + 1 > Graph::kMaxVertices) throw CapExceeded("augmentation beyond 64 vertices");
  std::vector<LabeledClass> out;
  std::unordered_set<std::string> seen;
  const VertexMask limit = VertexMask{1} << m;
  for (VertexMask s = 0; s < limit; ++s) {
    Graph child = parent.with_vertex(s);
    if (forbidden.order() > 0 && contains_subgraph_through(child, forbidden, m)) continue;
    CanonicalForm cf = canonical_form(child);
    if (!detail::is_canonical_extension(child, cf)) continue;
    if (!seen.insert(cf.certificate).second) continue;
    out.push_back({std::move(child), std::move(cf)});
  }
  return out;
}

/// All F-free graphs on n vertices up to isomorphism (n small).
inline std::vector<LabeledClass> enumerate_free_graphs(int n, const Graph& forbidden) {
  std::vector<LabeledClass> level{{Graph(0), canonical_form(Graph(0))}};
  for (int m = 0; m < n; ++m) {
    std::vector<LabeledClass> next;
    for (const auto& node : level) {
      auto kids = augment(node.graph, forbidden);
      next.insert(next.end(), std::make_move_iterator(kids.begin()), std::make_move_iterator(kids.end()));
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace berge_turan
