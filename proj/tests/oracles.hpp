#pragma once

// Brute-force reference implementations used only by the test suites. They
// deliberately avoid the library's search code paths.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "berge_turan/graph.hpp"

namespace oracle {

using berge_turan::Graph;

/// Graph from a bitmask over the pairs (i < j) in row-major order.
inline Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  int t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++t)
      if ((code >> t) & 1U) g.add_edge(i, j);
  return g;
}

inline bool isomorphic_by_permutation(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a.order() && ok; ++i)
      for (int j = i + 1; j < a.order() && ok; ++j)
        if (a.adjacent(i, j) != b.adjacent(perm[i], perm[j])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Counts k-subsets that are cliques by direct subset enumeration.
inline std::uint64_t clique_count_by_subsets(const Graph& g, int k) {
  const int n = g.order();
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (std::popcount(s) != k) continue;
    bool clique = true;
    for (int i = 0; i < n && clique; ++i)
      for (int j = i + 1; j < n && clique; ++j)
        if (((s >> i) & 1U) && ((s >> j) & 1U) && !g.adjacent(i, j)) clique = false;
    if (clique) ++count;
  }
  return count;
}

/// Plain k-colorability by backtracking in vertex order.
inline bool colorable(const Graph& g, int colors) {
  std::vector<int> c(static_cast<std::size_t>(g.order()), -1);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == g.order()) return true;
    for (int col = 0; col < colors; ++col) {
      bool ok = true;
      for (int w = 0; w < v; ++w)
        if (g.adjacent(v, w) && c[w] == col) ok = false;
      if (!ok) continue;
      c[v] = col;
      if (self(self, v + 1)) return true;
    }
    c[v] = -1;
    return false;
  };
  return rec(rec, 0);
}

inline int chromatic_by_trial(const Graph& g) {
  for (int k = 0; k <= g.order(); ++k)
    if (colorable(g, k)) return k;
  return g.order();
}

/// Non-induced subgraph containment by trying every injection.
inline bool contains_by_injection(const Graph& host, const Graph& pattern) {
  const int m = pattern.order();
  const int n = host.order();
  if (m > n) return false;
  std::vector<int> img(static_cast<std::size_t>(m), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self, int p) -> bool {
    if (p == m) return true;
    for (int x = 0; x < n; ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (int q = 0; q < p && ok; ++q)
        if (pattern.adjacent(p, q) && !host.adjacent(x, img[q])) ok = false;
      if (!ok) continue;
      used[x] = true;
      img[p] = x;
      if (self(self, p + 1)) return true;
      used[x] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

/// Binomial by the multiplicative formula in 128-bit integers.
inline std::uint64_t choose(int a, int b) {
  if (b < 0 || b > a) return 0;
  unsigned __int128 r = 1;
  for (int i = 1; i <= b; ++i) r = r * static_cast<unsigned>(a - b + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(r);
}

}  // namespace oracle
