#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "berge_turan/cliques.hpp"
#include "berge_turan/extremal.hpp"
#include "berge_turan/graph.hpp"
#include "berge_turan/invariants.hpp"

namespace berge_turan {

/// Connected components of g as vertex masks, ordered by lowest vertex.
inline std::vector<VertexMask> components(const Graph& g) {
  std::vector<VertexMask> out;
  VertexMask left = g.all_vertices();
  while (left != 0) {
    VertexMask comp = bit(lowest_vertex(left));
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

/// Hypothesis facts about F relevant to the Berge/generalized equality.
struct HypothesisFacts {
  int k = 3;
  int chi = 0;
  std::optional<int> sigma;  // empty when F is beyond the sigma cap
  bool critical_vertex = false;
  bool critical_edge = false;
  bool non_degenerate = false;  // chi(F) > k
  /// Components with chi = chi(F), when each of them has a critical edge and
  /// all other components have smaller chromatic number; 0 otherwise.
  int critical_edge_components = 0;
  std::vector<std::string> applicable;  // results whose hypotheses F meets
};

inline HypothesisFacts hypothesis_facts(const Graph& f, int k) {
  if (f.order() == 0) throw InvalidInput("F must have a vertex");
  HypothesisFacts h;
  h.k = k;
  h.chi = chromatic_number(f);
  if (f.order() <= kSigmaMaxVertices) h.sigma = sigma(f);
  for (int v = 0; v < f.order() && !h.critical_vertex; ++v)
    h.critical_vertex = chromatic_number(f.without_vertex(v)) < h.chi;
  for (const auto& [u, v] : f.edges()) {
    if (chromatic_number(f.without_edge(u, v)) < h.chi) {
      h.critical_edge = true;
      break;
    }
  }
  h.non_degenerate = h.chi > k;

  int top = 0;
  bool all_critical = true;
  for (VertexMask c : components(f)) {
    const Graph part = f.induced(c);
    if (chromatic_number(part) != h.chi) continue;
    ++top;
    bool has = false;
    for (const auto& [u, v] : part.edges()) has = has || chromatic_number(part.without_edge(u, v)) < h.chi;
    all_critical = all_critical && has;
  }
  h.critical_edge_components = all_critical ? top : 0;

  if (!h.non_degenerate) return h;
  h.applicable.emplace_back("constant-gap theorem: ex_k(n,Berge-F) = ex(n,K_k,F) + O(1)");
  if (h.critical_vertex) h.applicable.emplace_back("critical-vertex theorem: equality for large n");
  if (k <= 4) h.applicable.emplace_back("low-uniformity theorem (k <= 4): equality for large n");
  h.applicable.emplace_back("large-chromatic theorem: equality for large n once chi(F) is large enough for k (threshold not computed)");
  if (h.critical_edge_components > 0)
    h.applicable.emplace_back("critical-edge components theorem: ex_k(n,Berge-F) = N(K_k, K_{s-1} + T(n-s+1, chi-1)) with s = " +
                              std::to_string(h.critical_edge_components));
  return h;
}

struct ConjectureRow {
  int n = 0;
  SandwichReport sandwich;
  /// Prediction from the critical-edge components theorem, if it applies.
  std::optional<Count> component_prediction;

  [[nodiscard]] bool incomplete() const { return !sandwich.complete(); }
};

struct ConjectureReport {
  int k = 3;
  Graph forbidden;
  HypothesisFacts facts;
  std::vector<ConjectureRow> rows;
  [[nodiscard]] bool degenerate() const { return !facts.non_degenerate; }
};

/// Tabulates the four extremal numbers for n = max(k, |V(F)|) .. n_max with
/// the equality flags. Only finite-n facts are computed; no row is treated
/// as evidence for or against the asymptotic statement.
inline ConjectureReport conjecture_report(int n_max, int k, const Graph& f, const SearchConfig& cfg = {}) {
  if (k < 3) throw InvalidParameter("conjecture report needs k >= 3");
  ConjectureReport rep;
  rep.k = k;
  rep.forbidden = f;
  rep.facts = hypothesis_facts(f, k);
  for (int n = std::max(k, f.order()); n <= n_max; ++n) {
    ConjectureRow row;
    row.n = n;
    row.sandwich = verify_sandwich(n, k, f, cfg);
    const int s = rep.facts.critical_edge_components;
    if (rep.facts.non_degenerate && s > 0 && n >= s - 1)
      row.component_prediction = join_turan_clique_count(s - 1, n, rep.facts.chi - 1, k);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace berge_turan
