#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "berge_turan/cliques.hpp"
#include "berge_turan/error.hpp"
#include "berge_turan/graph.hpp"
#include "json.hpp"

namespace berge_turan {

/// Vertices of a hyperedge in increasing order.
inline std::vector<int> vertices_of(VertexMask e) {
  std::vector<int> out;
  for_each_vertex(e, [&](int v) { out.push_back(v); });
  return out;
}

/// Lexicographic order on the sorted vertex tuples of two equal-size sets.
inline bool tuple_less(VertexMask a, VertexMask b) noexcept {
  while (a != 0 && b != 0) {
    const int x = lowest_vertex(a);
    const int y = lowest_vertex(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

/// k-uniform hypergraph on vertices 0..n-1 (n <= 64). Hyperedges are kept in
/// lexicographic tuple order with a hash index for membership.
class Hypergraph {
 public:
  Hypergraph(int n, int k) : n_(n), k_(k) {
    if (n < 0 || n > Graph::kMaxVertices) throw InvalidParameter("hypergraph order must be in [0, 64]");
    if (k < 2) throw InvalidParameter("hypergraph uniformity must be >= 2");
  }

  static Hypergraph from_tuples(int n, int k, const std::vector<std::vector<int>>& tuples) {
    Hypergraph h(n, k);
    for (const auto& t : tuples) {
      VertexMask e = 0;
      for (int v : t) {
        if (v < 0 || v >= n) throw InvalidInput("hyperedge vertex out of range: " + std::to_string(v));
        if (e & bit(v)) throw InvalidInput("repeated vertex " + std::to_string(v) + " in hyperedge");
        e |= bit(v);
      }
      if (static_cast<int>(t.size()) != k) throw InvalidInput("hyperedge does not have exactly k vertices");
      if (!h.insert(e)) throw InvalidInput("duplicate hyperedge");
    }
    return h;
  }

  [[nodiscard]] int order() const noexcept { return n_; }
  [[nodiscard]] int uniformity() const noexcept { return k_; }
  [[nodiscard]] std::size_t size() const noexcept { return edges_.size(); }
  [[nodiscard]] const std::vector<VertexMask>& edges() const noexcept { return edges_; }
  [[nodiscard]] bool contains(VertexMask e) const { return index_.contains(e); }

  /// Adds hyperedge e; returns false if it was already present.
  bool insert(VertexMask e) {
    if (popcount(e) != k_ || (e & ~prefix_mask(n_)) != 0) throw InvalidInput("hyperedge is not a k-subset of the vertex set");
    if (!index_.insert(e).second) return false;
    edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e, tuple_less), e);
    return true;
  }

  bool erase(VertexMask e) {
    if (index_.erase(e) == 0) return false;
    edges_.erase(std::find(edges_.begin(), edges_.end(), e));
    return true;
  }

  [[nodiscard]] int degree(int v) const {
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [&](VertexMask e) { return (e >> v) & 1U; }));
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  int k_;
  std::vector<VertexMask> edges_;
  std::unordered_set<VertexMask> index_;
};

/// Text form: `k n : v1 v2 v3 ; v1 v2 v4 ; ...`
inline std::string hypergraph_to_text(const Hypergraph& h) {
  std::ostringstream os;
  os << h.uniformity() << ' ' << h.order() << " :";
  bool first = true;
  for (VertexMask e : h.edges()) {
    if (!first) os << " ;";
    first = false;
    for (int v : vertices_of(e)) os << ' ' << v;
  }
  return os.str();
}

inline Hypergraph hypergraph_from_text(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidInput("hypergraph text lacks ':' separator: '" + text + "'");
  std::istringstream head(text.substr(0, colon));
  int k = 0;
  int n = 0;
  std::string extra;
  if (!(head >> k >> n) || (head >> extra)) throw InvalidInput("hypergraph header must be 'k n': '" + text + "'");
  if (k < 2) throw InvalidInput("hypergraph uniformity must be >= 2");
  if (n < 0 || n > Graph::kMaxVertices) throw InvalidInput("hypergraph order out of range");

  std::vector<std::vector<int>> tuples;
  std::string body = text.substr(colon + 1);
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto semi = body.find(';', start);
    const std::string piece = body.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    std::istringstream ps(piece);
    std::vector<int> tuple;
    std::string tok;
    while (ps >> tok) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw InvalidInput("bad vertex token '" + tok + "'");
        tuple.push_back(v);
      } catch (const std::logic_error&) {
        throw InvalidInput("bad vertex token '" + tok + "'");
      }
    }
    if (tuple.empty()) {
      if (semi != std::string::npos || !tuples.empty()) throw InvalidInput("empty hyperedge in '" + text + "'");
    } else {
      tuples.push_back(std::move(tuple));
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return Hypergraph::from_tuples(n, k, tuples);
}

inline nlohmann::json hypergraph_to_json(const Hypergraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (VertexMask e : h.edges()) edges.push_back(vertices_of(e));
  return {{"n", h.order()}, {"k", h.uniformity()}, {"edges", std::move(edges)}};
}

inline Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  try {
    return Hypergraph::from_tuples(j.at("n").get<int>(), j.at("k").get<int>(),
                                   j.at("edges").get<std::vector<std::vector<int>>>());
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInput(std::string("malformed hypergraph JSON: ") + ex.what());
  } catch (const InvalidParameter& ex) {
    throw InvalidInput(ex.what());
  }
}

/// F^{+k}: each edge of F gets k - 2 fresh vertices, numbered after V(F) in
/// lexicographic edge order.
inline Hypergraph expansion(const Graph& f, int k) {
  if (k < 2) throw InvalidParameter("expansion requires k >= 2");
  const auto edges = f.edges();
  const long long total = f.order() + static_cast<long long>(k - 2) * static_cast<long long>(edges.size());
  if (total > Graph::kMaxVertices) throw CapExceeded("expansion would exceed 64 vertices");
  Hypergraph h(static_cast<int>(total), k);
  int fresh = f.order();
  for (const auto& [u, v] : edges) {
    VertexMask e = bit(u) | bit(v);
    for (int j = 0; j < k - 2; ++j) e |= bit(fresh++);
    h.insert(e);
  }
  return h;
}

/// The hypergraph whose hyperedges are the k-cliques of g.
inline Hypergraph clique_hypergraph(const Graph& g, int k) {
  if (k < 2) throw InvalidParameter("clique_hypergraph requires k >= 2");
  Hypergraph h(g.order(), k);
  for_each_clique(g, k, [&](VertexMask c) { h.insert(c); });
  return h;
}

}  // namespace berge_turan
