#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "berge_turan/error.hpp"
#include "berge_turan/graph.hpp"
#include "berge_turan/hypergraph.hpp"

namespace berge_turan {

/// A Berge copy of F inside H.
///
/// `vertex_embedding[p]` is the H-vertex of F-vertex p. `edge_assignment[i]`
/// is the hyperedge assigned to the i-th edge of F in `Graph::edges()` order.
struct BergeWitness {
  std::vector<int> vertex_embedding;
  std::vector<VertexMask> edge_assignment;
};

/// Independent re-check of a witness: injective embedding, each assigned
/// hyperedge belongs to H and contains its edge's image, assignments distinct.
inline bool is_valid_berge_witness(const Hypergraph& h, const Graph& f, const BergeWitness& w) {
  if (static_cast<int>(w.vertex_embedding.size()) != f.order()) return false;
  const auto edges = f.edges();
  if (w.edge_assignment.size() != edges.size()) return false;
  VertexMask used = 0;
  for (int x : w.vertex_embedding) {
    if (x < 0 || x >= h.order() || (used & bit(x))) return false;
    used |= bit(x);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const VertexMask e = w.edge_assignment[i];
    if (!h.contains(e)) return false;
    const VertexMask pair = bit(w.vertex_embedding[edges[i].first]) | bit(w.vertex_embedding[edges[i].second]);
    if ((e & pair) != pair) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (w.edge_assignment[j] == e) return false;
  }
  return true;
}

namespace detail {

// Backtracking embedding of V(F) with forward checking, plus a bipartite
// matching between the F-edges whose endpoints are placed and the hyperedges
// containing their images. All mutable state is per instance.
class BergeSearch {
 public:
  BergeSearch(const Hypergraph& h, const Graph& f) : h_(h), f_(f), n_(h.order()), edges_(f.edges()) {
    pair_edges_.assign(static_cast<std::size_t>(n_ * n_), {});
    const auto& hes = h.edges();
    for (int idx = 0; idx < static_cast<int>(hes.size()); ++idx) {
      const auto vs = vertices_of(hes[idx]);
      for (std::size_t a = 0; a < vs.size(); ++a) {
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
          pair_edges_[vs[a] * n_ + vs[b]].push_back(idx);
          pair_edges_[vs[b] * n_ + vs[a]].push_back(idx);
        }
      }
    }
    // Descending F-degree; ties favor vertices tied to earlier ones.
    VertexMask placed = 0;
    while (static_cast<int>(order_.size()) < f.order()) {
      int best = -1;
      for (int p = 0; p < f.order(); ++p) {
        if (placed & bit(p)) continue;
        if (best < 0 || f.degree(p) > f.degree(best) ||
            (f.degree(p) == f.degree(best) && popcount(f.neighbors(p) & placed) > popcount(f.neighbors(best) & placed))) {
          best = p;
        }
      }
      order_.push_back(best);
      placed |= bit(best);
    }
    edge_index_.assign(static_cast<std::size_t>(f.order() * f.order()), -1);
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
      edge_index_[edges_[i].first * f.order() + edges_[i].second] = i;
      edge_index_[edges_[i].second * f.order() + edges_[i].first] = i;
    }
  }

  /// Searches with F-edge `forced_edge` (if >= 0) pinned to hyperedge index
  /// `forced_hyperedge`, which is then unavailable to every other F-edge, and
  /// with `pinned` F-vertices already mapped (-1 = free).
  std::optional<BergeWitness> run(std::vector<int> pinned, int forced_edge = -1, int forced_hyperedge = -1) {
    forced_edge_ = forced_edge;
    forced_hyperedge_ = forced_hyperedge;
    image_ = std::move(pinned);
    VertexMask used = 0;
    for (int x : image_)
      if (x >= 0) used |= bit(x);
    match_of_edge_.assign(edges_.size(), -1);
    if (!matching_feasible()) return std::nullopt;
    if (!recurse(0, used)) return std::nullopt;
    BergeWitness w;
    w.vertex_embedding = image_;
    for (int idx : match_of_edge_) w.edge_assignment.push_back(h_.edges()[idx]);
    return w;
  }

 private:
  [[nodiscard]] const std::vector<int>& candidates(int x, int y) const { return pair_edges_[x * n_ + y]; }

  bool recurse(std::size_t depth, VertexMask used) {
    while (depth < order_.size() && image_[order_[depth]] >= 0) ++depth;
    if (depth == order_.size()) return matching_feasible();
    const int p = order_[depth];
    for (int x = 0; x < n_; ++x) {
      if (used & bit(x)) continue;
      // Forward check on edges from p to already placed F-vertices.
      bool ok = true;
      for_each_vertex(f_.neighbors(p), [&](int q) {
        if (ok && image_[q] >= 0 && candidates(x, image_[q]).empty()) ok = false;
      });
      if (!ok) continue;
      image_[p] = x;
      if (matching_feasible() && recurse(depth + 1, used | bit(x))) return true;
      image_[p] = -1;
    }
    return false;
  }

  // Maximum matching over the F-edges whose endpoints are both placed;
  // feasible iff it saturates them (Hall's condition).
  bool matching_feasible() {
    const int m = static_cast<int>(edges_.size());
    std::fill(match_of_edge_.begin(), match_of_edge_.end(), -1);
    match_of_hyperedge_.assign(h_.size(), -1);
    for (int i = 0; i < m; ++i) {
      if (!placed(i)) continue;
      visited_.assign(h_.size(), 0);
      if (!augment(i)) return false;
    }
    return true;
  }

  [[nodiscard]] bool placed(int i) const { return image_[edges_[i].first] >= 0 && image_[edges_[i].second] >= 0; }

  bool allowed(int i, int idx) const {
    if (forced_edge_ < 0) return true;
    return (i == forced_edge_) == (idx == forced_hyperedge_);
  }

  bool augment(int i) {
    for (int idx : candidates(image_[edges_[i].first], image_[edges_[i].second])) {
      if (visited_[idx] || !allowed(i, idx)) continue;
      visited_[idx] = 1;
      if (match_of_hyperedge_[idx] < 0 || augment(match_of_hyperedge_[idx])) {
        match_of_hyperedge_[idx] = i;
        match_of_edge_[i] = idx;
        return true;
      }
    }
    return false;
  }

  const Hypergraph& h_;
  const Graph& f_;
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> pair_edges_;
  std::vector<int> order_;
  std::vector<int> edge_index_;
  std::vector<int> image_;
  std::vector<int> match_of_edge_;
  std::vector<int> match_of_hyperedge_;
  std::vector<char> visited_;
  int forced_edge_ = -1;
  int forced_hyperedge_ = -1;
};

}  // namespace detail

/// Finds a Berge copy of F in H, or nothing.
inline std::optional<BergeWitness> contains_berge(const Hypergraph& h, const Graph& f) {
  if (f.size() == 0) throw InvalidInput("Berge containment needs F with at least one edge");
  if (f.order() > h.order() || static_cast<std::size_t>(f.size()) > h.size()) return std::nullopt;
  detail::BergeSearch search(h, f);
  return search.run(std::vector<int>(static_cast<std::size_t>(f.order()), -1));
}

/// Berge-F search in H + {e} restricted to copies that use the new hyperedge
/// e. When H itself is Berge-F-free this decides whether H + {e} is.
inline std::optional<BergeWitness> contains_berge_with(const Hypergraph& h, VertexMask e, const Graph& f) {
  if (f.size() == 0) throw InvalidInput("Berge containment needs F with at least one edge");
  Hypergraph extended = h;
  if (!extended.insert(e)) throw InvalidParameter("hyperedge already present");
  if (f.order() > extended.order() || static_cast<std::size_t>(f.size()) > extended.size()) return std::nullopt;
  const auto& hes = extended.edges();
  const int he = static_cast<int>(std::find(hes.begin(), hes.end(), e) - hes.begin());
  const auto fedges = f.edges();
  const auto inside = vertices_of(e);
  detail::BergeSearch search(extended, f);
  for (int i = 0; i < static_cast<int>(fedges.size()); ++i) {
    const auto [a, b] = fedges[i];
    for (int x : inside) {
      for (int y : inside) {
        if (x == y) continue;
        std::vector<int> pinned(static_cast<std::size_t>(f.order()), -1);
        pinned[a] = x;
        pinned[b] = y;
        if (auto w = search.run(std::move(pinned), i, he)) return w;
      }
    }
  }
  return std::nullopt;
}

inline constexpr int kOracleMaxEdges = 8;
inline constexpr int kOracleMaxVertices = 8;

/// Exhaustive Berge check by enumerating every injection V(F) -> V(H) and
/// every injective hyperedge assignment. Shares no code with contains_berge.
inline bool contains_berge_oracle(const Hypergraph& h, const Graph& f) {
  if (f.size() == 0) throw InvalidInput("Berge containment needs F with at least one edge");
  if (f.size() > kOracleMaxEdges || h.order() > kOracleMaxVertices) {
    throw CapExceeded("oracle guard: needs |E(F)| <= 8 and |V(H)| <= 8");
  }
  const auto fedges = f.edges();
  const auto& hes = h.edges();
  const int fv = f.order();
  std::vector<int> psi(static_cast<std::size_t>(fv), -1);
  std::vector<bool> taken_vertex(static_cast<std::size_t>(h.order()), false);
  std::vector<bool> taken_edge(hes.size(), false);

  auto assign_edges = [&](auto&& self, std::size_t i) -> bool {
    if (i == fedges.size()) return true;
    const int x = psi[fedges[i].first];
    const int y = psi[fedges[i].second];
    for (std::size_t j = 0; j < hes.size(); ++j) {
      if (taken_edge[j]) continue;
      const std::vector<int> vs = vertices_of(hes[j]);
      const bool has_x = std::find(vs.begin(), vs.end(), x) != vs.end();
      const bool has_y = std::find(vs.begin(), vs.end(), y) != vs.end();
      if (!has_x || !has_y) continue;
      taken_edge[j] = true;
      const bool found = self(self, i + 1);
      taken_edge[j] = false;
      if (found) return true;
    }
    return false;
  };

  auto inject = [&](auto&& self, int p) -> bool {
    if (p == fv) return assign_edges(assign_edges, 0);
    for (int x = 0; x < h.order(); ++x) {
      if (taken_vertex[x]) continue;
      taken_vertex[x] = true;
      psi[p] = x;
      const bool found = self(self, p + 1);
      taken_vertex[x] = false;
      if (found) return true;
    }
    return false;
  };
  return inject(inject, 0);
}

}  // namespace berge_turan
