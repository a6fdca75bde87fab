#pragma once

#include <variant>
#include <vector>

#include "berge_turan/graph.hpp"

namespace berge_turan {

namespace family {
struct Turan { int n; int r; };
struct JoinTuran { int i; int n; int r; };
struct CompleteGraph { int m; };
struct DisjointUnion;
/// Two copies of K_{r+1} sharing one vertex (B_{r,1}).
struct BookB { int r; };
/// Two vertex-disjoint copies of K_{r+1} (2K_{r+1}).
struct TwoCliques2K { int r; };
struct Custom { int n; std::vector<Edge> edges; };
}  // namespace family

using GraphFamilySpec = std::variant<family::Turan, family::JoinTuran, family::CompleteGraph,
                                     family::DisjointUnion, family::BookB, family::TwoCliques2K,
                                     family::Custom>;

namespace family {
struct DisjointUnion { std::vector<GraphFamilySpec> parts; };
}  // namespace family

inline Graph build_family(const GraphFamilySpec& spec) {
  struct Builder {
    Graph operator()(const family::Turan& s) const { return turan_graph(s.n, s.r); }
    Graph operator()(const family::JoinTuran& s) const { return join_turan(s.i, s.n, s.r); }
    Graph operator()(const family::CompleteGraph& s) const {
      if (s.m < 0) throw InvalidParameter("complete graph order must be >= 0");
      return complete_graph(s.m);
    }
    Graph operator()(const family::DisjointUnion& s) const {
      std::vector<Graph> parts;
      parts.reserve(s.parts.size());
      for (const auto& p : s.parts) parts.push_back(build_family(p));
      return disjoint_union(parts);
    }
    Graph operator()(const family::BookB& s) const { return book_graph(s.r); }
    Graph operator()(const family::TwoCliques2K& s) const { return two_cliques(s.r); }
    Graph operator()(const family::Custom& s) const {
      if (s.n < 0 || s.n > Graph::kMaxVertices) throw InvalidInput("custom graph order out of range");
      return Graph::from_edges(s.n, s.edges);
    }
  };
  return std::visit(Builder{}, spec);
}

}  // namespace berge_turan
