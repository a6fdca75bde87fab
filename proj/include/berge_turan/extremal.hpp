#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "berge_turan/augmentation.hpp"
#include "berge_turan/berge.hpp"
#include "berge_turan/blue_red.hpp"
#include "berge_turan/canonical.hpp"
#include "berge_turan/cliques.hpp"
#include "berge_turan/coloring.hpp"
#include "berge_turan/graph6.hpp"
#include "berge_turan/hypergraph.hpp"
#include "berge_turan/invariants.hpp"
#include "berge_turan/parallel.hpp"
#include "berge_turan/subgraph.hpp"

namespace berge_turan {

enum class Problem { EdgeTuran, GeneralizedTuran, ColoredTuran, BergeTuran };

inline std::string to_string(Problem p) {
  switch (p) {
    case Problem::EdgeTuran: return "ex";
    case Problem::GeneralizedTuran: return "ex-gen";
    case Problem::ColoredTuran: return "ex-col";
    case Problem::BergeTuran: return "ex-berge";
  }
  return "?";
}

/// Search limits and parallelism. Caps refuse rather than approximate.
struct SearchConfig {
  int graph_cap = 9;
  int colored_cap = 8;
  int berge_cap_k3 = 7;  // also used for k = 2
  int berge_cap_k4 = 6;  // also used for k = 5
  int workers = 1;
};

using Witness = std::variant<Graph, BlueRedGraph, Hypergraph>;

struct ExtremalResult {
  Problem problem = Problem::EdgeTuran;
  int n = 0;
  int k = 2;
  Graph forbidden;
  std::string forbidden_certificate;
  Count value = 0;
  Witness witness = Graph(0);
  std::string witness_certificate;
  Count nodes_explored = 0;
  std::chrono::nanoseconds wall_time{0};
};

/// Canonical certificate of a hypergraph, via its vertex/hyperedge incidence
/// graph with the two sides colored apart.
inline std::string hypergraph_certificate(const Hypergraph& h) {
  const int n = h.order();
  const int m = static_cast<int>(h.size());
  if (n + m > Graph::kMaxVertices) throw CapExceeded("hypergraph too large for an incidence certificate");
  Graph inc(n + m);
  std::vector<int> colors(static_cast<std::size_t>(n + m), 0);
  for (int j = 0; j < m; ++j) {
    colors[n + j] = 1;
    for_each_vertex(h.edges()[j], [&](int v) { inc.add_edge(v, n + j); });
  }
  return std::to_string(h.uniformity()) + ":" + canonical_form(inc, colors).certificate;
}

/// Certificate of a blue-red graph: the underlying graph's certificate plus
/// the red subgraph under the same canonical relabeling.
inline std::string blue_red_certificate(const BlueRedGraph& g) {
  const CanonicalForm cf = canonical_form(g.graph());
  return cf.certificate + "|" + graph6_encode(g.red().relabeled(cf.label));
}

namespace detail {

inline void require_edge(const Graph& f) {
  if (f.size() == 0) throw InvalidParameter("forbidden graph must have an edge");
}

inline void require_cap(int n, int cap, const char* what) {
  if (n < 0) throw InvalidParameter("n must be non-negative");
  if (n > cap) throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

// Objective over graphs for the three graph problems, with an admissible
// bound on any graph of order n having `g` as the induced subgraph on its
// first g.order() vertices.
struct GraphObjective {
  Problem problem;
  int n;
  int k;

  [[nodiscard]] Count edge_bound(const Graph& g) const {
    return static_cast<Count>(g.size()) + binomial(n, 2) - binomial(g.order(), 2);
  }

  [[nodiscard]] Count clique_bound(const Graph& g) const {
    const int fresh = n - g.order();
    Count total = 0;
    for (int j = 0; j <= std::min(k, fresh); ++j) {
      const int rest = k - j;
      const Count inside = rest == 0 ? 1 : rest == 1 ? static_cast<Count>(g.order()) : count_cliques(g, rest);
      total = checked_add(total, checked_mul(binomial(fresh, j), inside));
    }
    return total;
  }

  [[nodiscard]] Count bound(const Graph& g) const {
    switch (problem) {
      case Problem::EdgeTuran: return edge_bound(g);
      case Problem::GeneralizedTuran: return clique_bound(g);
      default: return checked_add(edge_bound(g), clique_bound(g));
    }
  }

  [[nodiscard]] Count cheap_value(const Graph& g) const {
    switch (problem) {
      case Problem::EdgeTuran: return static_cast<Count>(g.size());
      case Problem::GeneralizedTuran: return count_cliques(g, k);
      default: return std::max<Count>(static_cast<Count>(g.size()), count_cliques(g, k));
    }
  }
};

struct LeafBest {
  bool found = false;
  Count value = 0;
  std::string certificate;
  Graph graph;  // canonically relabeled
};

inline void offer_leaf(LeafBest& best, Count value, const std::string& cert, const Graph& canon) {
  if (!best.found || value > best.value || (value == best.value && cert < best.certificate)) {
    best = {true, value, cert, canon};
  }
}

// Largest r with T(n, r) still F-free, used only to seed the incumbent.
inline Graph seed_graph(int n, const Graph& f) {
  const int r = std::max(1, chromatic_number(f) - 1);
  return turan_graph(n, std::min(r, std::max(n, 1)));
}

inline ExtremalResult run_graph_search(Problem problem, int n, int k, const Graph& f, const SearchConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const GraphObjective obj{problem, n, k};

  // Exact inner value of a leaf, computed on its canonical relabeling so the
  // witness does not depend on which labeled representative was reached.
  auto leaf_value = [&](const Graph& canon, Count& nodes, BlueRedGraph* coloring) -> Count {
    if (problem != Problem::ColoredTuran) return obj.cheap_value(canon);
    auto best = best_coloring(canon, k);
    nodes += best.nodes;
    if (coloring) *coloring = std::move(best.coloring);
    return best.value;
  };

  Count seed_value = 0;
  if (n > 0) {
    const Graph seed = seed_graph(n, f);
    if (!contains_subgraph(seed, f)) {
      Count ignored = 0;
      seed_value = leaf_value(seed, ignored, nullptr);
    }
  }
  MonotoneMax<Count> incumbent(seed_value);

  // Breadth-first to the split depth, then one task per class there.
  const int split = std::min(n, 5);
  std::vector<LabeledClass> frontier{{Graph(0), canonical_form(Graph(0))}};
  Count nodes = 0;
  for (int m = 0; m < split; ++m) {
    std::vector<LabeledClass> next;
    for (const auto& node : frontier) {
      ++nodes;
      if (obj.bound(node.graph) < incumbent.get()) continue;
      auto kids = augment(node.graph, f);
      next.insert(next.end(), std::make_move_iterator(kids.begin()), std::make_move_iterator(kids.end()));
    }
    frontier = std::move(next);
  }

  std::vector<LeafBest> task_best(frontier.size());
  std::vector<Count> task_nodes(frontier.size(), 0);
  parallel_for(frontier.size(), cfg.workers, [&](std::size_t t) {
    LeafBest& best = task_best[t];
    Count& count = task_nodes[t];
    auto dfs = [&](auto&& self, const LabeledClass& node) -> void {
      ++count;
      if (obj.bound(node.graph) < incumbent.get()) return;
      if (node.graph.order() == n) {
        if (obj.cheap_value(node.graph) < incumbent.get() && problem != Problem::ColoredTuran) return;
        const Graph canon = node.graph.relabeled(node.form.label);
        const Count v = leaf_value(canon, count, nullptr);
        incumbent.offer(v);
        offer_leaf(best, v, node.form.certificate, canon);
        return;
      }
      for (const auto& kid : augment(node.graph, f)) self(self, kid);
    };
    dfs(dfs, frontier[t]);
  });

  LeafBest overall;
  for (std::size_t t = 0; t < task_best.size(); ++t) {
    nodes += task_nodes[t];
    if (task_best[t].found) offer_leaf(overall, task_best[t].value, task_best[t].certificate, task_best[t].graph);
  }
  if (!overall.found) throw InvariantViolation("search found no F-free graph although the empty graph is one");

  ExtremalResult res;
  res.problem = problem;
  res.n = n;
  res.k = k;
  res.forbidden = f;
  res.forbidden_certificate = certificate(f);
  res.value = overall.value;
  res.nodes_explored = nodes;
  if (problem == Problem::ColoredTuran) {
    BlueRedGraph coloring;
    Count ignored = 0;
    leaf_value(overall.graph, ignored, &coloring);
    res.witness_certificate = blue_red_certificate(coloring);
    res.witness = std::move(coloring);
  } else {
    res.witness_certificate = overall.certificate;
    res.witness = overall.graph;
  }
  res.wall_time = std::chrono::steady_clock::now() - start;
  return res;
}

}  // namespace detail

/// Re-checks a result's witness with code paths independent of the search.
/// Throws InvariantViolation on any mismatch.
inline void revalidate(const ExtremalResult& r) {
  auto fail = [&](const std::string& why) {
    throw InvariantViolation(to_string(r.problem) + " witness for n = " + std::to_string(r.n) + ": " + why);
  };
  if (r.problem == Problem::BergeTuran) {
    const auto* h = std::get_if<Hypergraph>(&r.witness);
    if (!h) fail("wrong witness type");
    if (h->order() != r.n || h->uniformity() != r.k) fail("wrong order or uniformity");
    if (h->size() != r.value) fail("hyperedge count differs from value");
    if (contains_berge(*h, r.forbidden)) fail("contains a Berge copy of F");
    return;
  }
  const Graph* g = nullptr;
  Count value = 0;
  if (r.problem == Problem::ColoredTuran) {
    const auto* br = std::get_if<BlueRedGraph>(&r.witness);
    if (!br) fail("wrong witness type");
    g = &br->graph();
    value = g_value(*br, r.k);
  } else {
    g = std::get_if<Graph>(&r.witness);
    if (!g) fail("wrong witness type");
    value = r.problem == Problem::EdgeTuran ? static_cast<Count>(g->size()) : count_cliques(*g, r.k);
  }
  if (g->order() != r.n) fail("wrong order");
  if (value != r.value) fail("recomputed value " + std::to_string(value) + " differs");
  if (contains_subgraph(*g, r.forbidden)) fail("contains F");
}

/// ex(n, F): most edges in an n-vertex F-free graph.
inline ExtremalResult ex_edges(int n, const Graph& f, const SearchConfig& cfg = {}) {
  detail::require_edge(f);
  detail::require_cap(n, cfg.graph_cap, "ex");
  auto r = detail::run_graph_search(Problem::EdgeTuran, n, 2, f, cfg);
  revalidate(r);
  return r;
}

/// ex(n, K_k, F): most k-cliques in an n-vertex F-free graph.
inline ExtremalResult ex_generalized(int n, int k, const Graph& f, const SearchConfig& cfg = {}) {
  if (k < 2) throw InvalidParameter("ex-gen needs k >= 2");
  detail::require_edge(f);
  detail::require_cap(n, cfg.graph_cap, "ex-gen");
  auto r = detail::run_graph_search(Problem::GeneralizedTuran, n, k, f, cfg);
  revalidate(r);
  return r;
}

/// ex^col(n, F): largest g over n-vertex F-free blue-red graphs.
inline ExtremalResult ex_colored(int n, int k, const Graph& f, const SearchConfig& cfg = {}) {
  if (k < 3) throw InvalidParameter("ex-col needs k >= 3");
  detail::require_edge(f);
  detail::require_cap(n, std::min(cfg.colored_cap, 11), "ex-col");
  auto r = detail::run_graph_search(Problem::ColoredTuran, n, k, f, cfg);
  revalidate(r);
  return r;
}

namespace detail {

// Decision-tree search over the k-subsets in lexicographic order.
class BergeTuranSearch {
 public:
  BergeTuranSearch(int n, int k, const Graph& f) : n_(n), k_(k), f_(f) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int pos, int from) -> void {
      if (pos == k) {
        VertexMask e = 0;
        for (int v : pick) e |= bit(v);
        candidates_.push_back(e);
        return;
      }
      for (int v = from; v <= n - (k - pos); ++v) {
        pick[pos] = v;
        self(self, pos + 1, v + 1);
      }
    };
    rec(rec, 0, 0);
  }

  struct Prefix {
    std::vector<bool> taken;  // decisions for candidates [0, size)
  };

  [[nodiscard]] std::size_t candidate_count() const noexcept { return candidates_.size(); }

  // Enumerates feasible decision prefixes of the given length, include first.
  std::vector<Prefix> prefixes(std::size_t length, Count& nodes) const {
    std::vector<Prefix> out;
    Hypergraph h(n_, k_);
    std::vector<bool> taken;
    auto rec = [&](auto&& self) -> void {
      ++nodes;
      const std::size_t i = taken.size();
      if (i == length) {
        out.push_back({taken});
        return;
      }
      if (!contains_berge_with(h, candidates_[i], f_)) {
        h.insert(candidates_[i]);
        taken.push_back(true);
        self(self);
        taken.pop_back();
        h.erase(candidates_[i]);
      }
      if (i > 0) {  // the first hyperedge is always taken
        taken.push_back(false);
        self(self);
        taken.pop_back();
      }
    };
    rec(rec);
    return out;
  }

  struct TaskResult {
    Count value = 0;
    std::optional<Hypergraph> witness;
    Count nodes = 0;
  };

  TaskResult run(const Prefix& prefix, MonotoneMax<Count>& global) const {
    TaskResult res;
    Hypergraph h(n_, k_);
    for (std::size_t i = 0; i < prefix.taken.size(); ++i)
      if (prefix.taken[i]) h.insert(candidates_[i]);
    std::vector<bool> dead(candidates_.size(), false);
    Count alive = 0;
    for (std::size_t i = prefix.taken.size(); i < candidates_.size(); ++i) {
      dead[i] = contains_berge_with(h, candidates_[i], f_).has_value();
      if (!dead[i]) ++alive;
    }
    bool have = false;
    auto dfs = [&](auto&& self, std::size_t i, Count alive_left) -> void {
      ++res.nodes;
      const Count bound = static_cast<Count>(h.size()) + alive_left;
      if (bound < global.get() || (have && bound <= res.value)) return;
      if (i == candidates_.size()) {
        have = true;
        res.value = h.size();
        res.witness = h;
        global.offer(res.value);
        return;
      }
      if (dead[i]) {
        self(self, i + 1, alive_left);
        return;
      }
      // Include: candidates that become dead stay dead below.
      h.insert(candidates_[i]);
      std::vector<std::size_t> killed;
      for (std::size_t j = i + 1; j < candidates_.size(); ++j) {
        if (dead[j]) continue;
        if (contains_berge_with(h, candidates_[j], f_)) {
          dead[j] = true;
          killed.push_back(j);
        }
      }
      self(self, i + 1, alive_left - 1 - killed.size());
      for (std::size_t j : killed) dead[j] = false;
      h.erase(candidates_[i]);
      self(self, i + 1, alive_left - 1);
    };
    dfs(dfs, prefix.taken.size(), alive);
    return res;
  }

 private:
  int n_;
  int k_;
  Graph f_;
  std::vector<VertexMask> candidates_;
};

}  // namespace detail

/// ex_k(n, Berge-F): most hyperedges in an n-vertex k-uniform Berge-F-free
/// hypergraph. The witness is the first optimum in include-first
/// lexicographic decision order, so it does not depend on the worker count.
inline ExtremalResult ex_berge(int n, int k, const Graph& f, const SearchConfig& cfg = {}) {
  const auto start = std::chrono::steady_clock::now();
  detail::require_edge(f);
  if (k < 2) throw InvalidParameter("ex-berge needs k >= 2");
  if (k >= 6) throw CapExceeded("ex-berge is limited to uniformity k <= 5");
  detail::require_cap(n, k <= 3 ? cfg.berge_cap_k3 : cfg.berge_cap_k4, "ex-berge");

  ExtremalResult res;
  res.problem = Problem::BergeTuran;
  res.n = n;
  res.k = k;
  res.forbidden = f;
  res.forbidden_certificate = certificate(f);

  Hypergraph best(n, k);
  if (n >= k && f.size() >= 2) {
    detail::BergeTuranSearch search(n, k, f);
    const std::size_t depth = std::min<std::size_t>(search.candidate_count(), 6);
    Count nodes = 0;
    const auto prefixes = search.prefixes(depth, nodes);
    detail::MonotoneMax<Count> global(0);
    std::vector<detail::BergeTuranSearch::TaskResult> results(prefixes.size());
    detail::parallel_for(prefixes.size(), cfg.workers, [&](std::size_t t) { results[t] = search.run(prefixes[t], global); });
    for (const auto& r : results) {
      nodes += r.nodes;
      if (r.witness && r.value > best.size()) best = *r.witness;
    }
    res.nodes_explored = nodes;
  }
  res.value = best.size();
  res.witness_certificate = hypergraph_certificate(best);
  res.witness = std::move(best);
  res.wall_time = std::chrono::steady_clock::now() - start;
  revalidate(res);
  return res;
}

/// The four quantities of the sandwich bounds at one (n, k, F).
struct SandwichReport {
  int n = 0;
  int k = 3;
  std::optional<Count> generalized;
  std::optional<Count> berge;
  std::optional<Count> colored;
  std::optional<Count> edges;
  std::optional<int> berge_min_degree;  // of the extremal hypergraph found
  std::vector<std::string> refused;     // sub-computations that hit a cap

  [[nodiscard]] bool complete() const { return generalized && berge && colored && edges; }
  [[nodiscard]] std::optional<bool> conjecture_equality() const {
    if (!generalized || !berge) return std::nullopt;
    return *generalized == *berge;
  }
};

/// Computes what fits under the caps and enforces
/// ex(n,K_k,F) <= ex_k(n,Berge-F) <= ex^col(n,F) <= ex(n,K_k,F) + ex(n,F)
/// on every pair that is available. A violation throws InvariantViolation.
inline SandwichReport verify_sandwich(int n, int k, const Graph& f, const SearchConfig& cfg = {}) {
  SandwichReport rep;
  rep.n = n;
  rep.k = k;
  auto attempt = [&](const char* name, std::optional<Count>& slot, auto&& fn) {
    try {
      slot = fn().value;
    } catch (const CapExceeded&) {
      rep.refused.emplace_back(name);
    }
  };
  attempt("ex-gen", rep.generalized, [&] { return ex_generalized(n, k, f, cfg); });
  attempt("ex-berge", rep.berge, [&] {
    auto r = ex_berge(n, k, f, cfg);
    const auto& h = std::get<Hypergraph>(r.witness);
    int low = h.order() > 0 ? h.degree(0) : 0;
    for (int v = 1; v < h.order(); ++v) low = std::min(low, h.degree(v));
    rep.berge_min_degree = low;
    return r;
  });
  attempt("ex-col", rep.colored, [&] { return ex_colored(n, k, f, cfg); });
  attempt("ex", rep.edges, [&] { return ex_edges(n, f, cfg); });

  auto check = [&](const std::optional<Count>& lo, const std::optional<Count>& hi, const char* what) {
    if (lo && hi && *lo > *hi)
      throw InvariantViolation(std::string("sandwich violated: ") + what + " at n = " + std::to_string(n));
  };
  check(rep.generalized, rep.berge, "ex(n,K_k,F) <= ex_k(n,Berge-F)");
  check(rep.berge, rep.colored, "ex_k(n,Berge-F) <= ex^col(n,F)");
  check(rep.generalized, rep.colored, "ex(n,K_k,F) <= ex^col(n,F)");
  if (rep.generalized && rep.edges) {
    const std::optional<Count> top = *rep.generalized + *rep.edges;
    check(rep.colored, top, "ex^col(n,F) <= ex(n,K_k,F) + ex(n,F)");
    check(rep.berge, top, "ex_k(n,Berge-F) <= ex(n,K_k,F) + ex(n,F)");
  }
  return rep;
}

}  // namespace berge_turan
