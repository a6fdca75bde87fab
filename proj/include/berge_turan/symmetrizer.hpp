#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "berge_turan/blue_red.hpp"
#include "berge_turan/cliques.hpp"
#include "berge_turan/error.hpp"
#include "berge_turan/graph.hpp"
#include "berge_turan/invariants.hpp"
#include "berge_turan/parallel.hpp"
#include "berge_turan/subgraph.hpp"

namespace berge_turan {

struct SymmetrizationState {
  BlueRedGraph current;
  int k = 3;
  Graph forbidden;
  std::vector<std::pair<std::uint64_t, Count>> g_history;  // (step, g)
  std::uint64_t moves_applied = 0;
  std::vector<std::string> warnings;

  [[nodiscard]] Count g() const { return g_history.empty() ? g_value(current, k) : g_history.back().second; }
};

struct SymmetrizationMove {
  int u = 0;
  VertexMask s = 0;
  Count g_before = 0;
  Count g_after = 0;
};

/// The graph after re-attaching u as a copy of the common neighborhood of S:
/// blue to the common blue neighbors, red to the common red neighbors.
inline BlueRedGraph symmetrized(const BlueRedGraph& g, int u, VertexMask s) {
  if (u < 0 || u >= g.order()) throw InvalidParameter("u is not a vertex");
  if (s == 0 || (s & ~prefix_mask(g.order())) != 0) throw InvalidParameter("S must be a nonempty set of vertices");
  if (s & bit(u)) throw InvalidParameter("u must not belong to S");
  const Graph blue = g.blue();
  VertexMask common_blue = prefix_mask(g.order());
  VertexMask common_red = prefix_mask(g.order());
  for_each_vertex(s, [&](int x) {
    common_blue &= blue.neighbors(x);
    common_red &= g.red().neighbors(x);
  });
  BlueRedGraph out = g;
  out.isolate(u);
  for_each_vertex(common_blue & ~bit(u), [&](int v) { out.add_blue(u, v); });
  for_each_vertex(common_red & ~bit(u), [&](int v) { out.add_red(u, v); });
  return out;
}

/// Applies the move (u, S) to `state` if it strictly increases g and the
/// result is still F-free. Returns the applied move, or nothing.
inline std::optional<SymmetrizationMove> symmetrize_step(SymmetrizationState& state, int u, VertexMask s,
                                                         std::uint64_t step = 0) {
  BlueRedGraph next = symmetrized(state.current, u, s);
  const Count before = state.g();
  const Count after = g_value(next, state.k);
  if (after <= before) return std::nullopt;
  if (contains_subgraph_through(next.graph(), state.forbidden, u)) return std::nullopt;
  state.current = std::move(next);
  state.g_history.emplace_back(step, after);
  ++state.moves_applied;
  return SymmetrizationMove{u, s, before, after};
}

namespace detail {

inline constexpr int kSymmetrizerChains = 4;
inline constexpr std::uint64_t kStallLimit = 1500;

// Random balanced r-partite graph, each cross pair an edge with probability
// 1/2, all blue.
inline BlueRedGraph random_partite_seed(int n, int r, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(0.5);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (turan_part(a, r) != turan_part(b, r) && coin(rng)) g.add_edge(a, b);
  return BlueRedGraph(std::move(g));
}

inline VertexMask sample_set(const BlueRedGraph& g, int k, int u, int max_size, std::mt19937_64& rng) {
  const Graph blue = g.blue();
  std::vector<double> weight(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) weight[v] = v == u ? 0.0 : 1.0 + static_cast<double>(count_cliques_through(blue, k, v));
  const int size = std::uniform_int_distribution<int>(1, std::min(max_size, g.order() - 1))(rng);
  VertexMask s = 0;
  for (int i = 0; i < size; ++i) {
    std::discrete_distribution<int> pick(weight.begin(), weight.end());
    const int v = pick(rng);
    s |= bit(v);
    weight[v] = 0.0;
  }
  return s;
}

inline SymmetrizationState run_chain(int n, int k, const Graph& f, int r, std::uint64_t seed, std::uint64_t budget) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(seed)};
  std::mt19937_64 rng(seq);
  auto fresh = [&](std::uint64_t step) {
    SymmetrizationState s{random_partite_seed(n, r, rng), k, f, {}, 0, {}};
    if (contains_subgraph(s.current.graph(), f)) throw InvariantViolation("seed graph contains F");
    s.g_history.emplace_back(step, g_value(s.current, k));
    return s;
  };
  SymmetrizationState best = fresh(0);
  SymmetrizationState cur = best;
  std::uint64_t stalled = 0;
  const int max_size = std::max(1, f.order());
  for (std::uint64_t step = 1; step <= budget && n >= 2; ++step) {
    std::uniform_int_distribution<int> vertex(0, n - 1);
    const int u = vertex(rng);
    const VertexMask s = sample_set(cur.current, k, u, max_size, rng);
    if (symmetrize_step(cur, u, s, step)) {
      stalled = 0;
      if (cur.g() > best.g()) {
        best.current = cur.current;
        best.g_history.emplace_back(step, cur.g());
        ++best.moves_applied;
      }
    } else if (++stalled >= kStallLimit) {
      cur = fresh(step);
      stalled = 0;
    }
  }
  return best;
}

}  // namespace detail

/// Zykov-style local improvement from seeded random r-partite graphs, with
/// r = chi(F) - 1. The budget counts move attempts and is split evenly over
/// a fixed number of independent chains (restarting when stuck), so the
/// result depends only on the inputs and the seed, not on `workers`.
/// g_history of the returned state records each new best and only increases.
inline SymmetrizationState run_symmetrization(int n, int k, const Graph& f, std::uint64_t seed, std::uint64_t budget,
                                              int workers = 1) {
  if (k < 3) throw InvalidParameter("symmetrization needs k >= 3");
  if (n < 1 || n > Graph::kMaxVertices) throw InvalidParameter("n must be in [1, 64]");
  if (f.size() == 0) throw InvalidParameter("forbidden graph must have an edge");
  const int chi = chromatic_number(f);
  const int r = std::max(1, chi - 1);

  std::vector<std::string> warnings;
  if (chi <= k) {
    warnings.push_back("chi(F) = " + std::to_string(chi) + " <= k = " + std::to_string(k) +
                       ": degenerate regime, ex_k(n, Berge-F) = o(n^k)");
  }

  auto chain_seed = [&](std::uint64_t c) { return seed * 0x9E3779B97F4A7C15ULL + c; };
  if (budget == 0) {
    SymmetrizationState s = detail::run_chain(n, k, f, r, chain_seed(0), 0);
    s.warnings = std::move(warnings);
    return s;
  }

  const int chains = detail::kSymmetrizerChains;
  std::vector<SymmetrizationState> results(static_cast<std::size_t>(chains));
  detail::parallel_for(static_cast<std::size_t>(chains), workers, [&](std::size_t c) {
    const std::uint64_t share = budget / chains + (c < budget % chains ? 1 : 0);
    results[c] = detail::run_chain(n, k, f, r, chain_seed(c), share);
  });
  std::size_t best = 0;
  for (std::size_t c = 1; c < results.size(); ++c)
    if (results[c].g() > results[best].g()) best = c;
  SymmetrizationState out = std::move(results[best]);
  if (contains_subgraph(out.current.graph(), f)) throw InvariantViolation("symmetrization produced a graph containing F");
  if (g_value(out.current, k) != out.g()) throw InvariantViolation("symmetrization history disagrees with final g");
  out.warnings = std::move(warnings);
  return out;
}

}  // namespace berge_turan
