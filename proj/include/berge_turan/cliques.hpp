#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "berge_turan/error.hpp"
#include "berge_turan/graph.hpp"

namespace berge_turan {

using Count = std::uint64_t;

class CountOverflow : public std::overflow_error {
 public:
  explicit CountOverflow(const std::string& what) : std::overflow_error(what) {}
};

inline Count checked_add(Count a, Count b) {
  Count out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw CountOverflow("64-bit count overflow in addition");
  return out;
}

inline Count checked_mul(Count a, Count b) {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw CountOverflow("64-bit count overflow in multiplication");
  return out;
}

/// C(a, b) with C(a, b) = 0 outside 0 <= b <= a. Exact; throws on overflow.
inline Count binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Count result = 1;
  for (long long i = 1; i <= b; ++i) {
    // result * (a - b + i) / i stays integral at every step.
    const Count num = static_cast<Count>(a - b + i);
    const Count den = static_cast<Count>(i);
    const Count g1 = std::gcd(result, den);
    result = checked_mul(result / g1, num / (den / g1));
  }
  return result;
}

namespace detail {

// Pivoted recursion over the succinct clique tree: each leaf with `held`
// forced vertices and `pivots` optional ones stands for C(pivots, k - held)
// distinct k-cliques.
inline Count pivot_count(const Graph& g, VertexMask cand, int held, int pivots, int k) {
  if (held > k) return 0;
  if (held + pivots + popcount(cand) < k) return 0;
  if (cand == 0 || held == k) return binomial(pivots, k - held);

  int pivot = lowest_vertex(cand);
  int best = -1;
  for_each_vertex(cand, [&](int v) {
    const int d = popcount(g.neighbors(v) & cand);
    if (d > best) {
      best = d;
      pivot = v;
    }
  });

  Count total = pivot_count(g, cand & g.neighbors(pivot), held, pivots + 1, k);
  VertexMask branch = cand & ~g.neighbors(pivot) & ~bit(pivot);
  VertexMask remaining = cand;
  for_each_vertex(branch, [&](int v) {
    total = checked_add(total, pivot_count(g, remaining & g.neighbors(v), held + 1, pivots, k));
    remaining &= ~bit(v);
  });
  return total;
}

}  // namespace detail

/// Number of k-vertex complete subgraphs of g restricted to `within`.
inline Count count_cliques(const Graph& g, int k, VertexMask within) {
  if (k < 1) throw InvalidParameter("count_cliques requires k >= 1");
  return detail::pivot_count(g, within & g.all_vertices(), 0, 0, k);
}

inline Count count_cliques(const Graph& g, int k) { return count_cliques(g, k, g.all_vertices()); }

/// Number of k-cliques of g that contain vertex v.
inline Count count_cliques_through(const Graph& g, int k, int v) {
  if (k < 1) throw InvalidParameter("count_cliques requires k >= 1");
  return k == 1 ? 1 : count_cliques(g, k - 1, g.neighbors(v));
}

/// Calls fn(mask) for every k-clique of g inside `within`, in increasing
/// lexicographic order of vertex tuples.
template <typename Fn>
inline void for_each_clique(const Graph& g, int k, VertexMask within, Fn&& fn) {
  auto rec = [&](auto&& self, VertexMask clique, VertexMask cand, int need) -> void {
    if (need == 0) {
      fn(clique);
      return;
    }
    while (popcount(cand) >= need) {
      const int v = lowest_vertex(cand);
      cand &= cand - 1;
      self(self, clique | bit(v), cand & g.neighbors(v), need - 1);
    }
  };
  if (k >= 1) rec(rec, VertexMask{0}, within & g.all_vertices(), k);
}

template <typename Fn>
inline void for_each_clique(const Graph& g, int k, Fn&& fn) {
  for_each_clique(g, k, g.all_vertices(), std::forward<Fn>(fn));
}

/// Part sizes of T(n, r): the first n mod r parts get the extra vertex.
inline std::vector<Count> turan_part_sizes(long long n, long long r) {
  if (r < 1) throw InvalidParameter("Turán graph requires r >= 1");
  if (n < 0) throw InvalidParameter("Turán graph requires n >= 0");
  std::vector<Count> sizes(static_cast<std::size_t>(r), static_cast<Count>(n / r));
  for (long long j = 0; j < n % r; ++j) ++sizes[static_cast<std::size_t>(j)];
  return sizes;
}

/// N(K_k, T(n, r)) in closed form: the k-th elementary symmetric polynomial
/// of the part sizes.
inline Count turan_clique_count(long long n, long long r, int k) {
  if (k < 1) throw InvalidParameter("turan_clique_count requires k >= 1");
  const auto sizes = turan_part_sizes(n, r);
  std::vector<Count> e(static_cast<std::size_t>(k) + 1, 0);
  e[0] = 1;
  for (Count s : sizes) {
    for (int j = k; j >= 1; --j) e[j] = checked_add(e[j], checked_mul(e[j - 1], s));
  }
  return e[static_cast<std::size_t>(k)];
}

/// N(K_k, K_i + T(n - i, r)) in closed form.
inline Count join_turan_clique_count(long long i, long long n, long long r, int k) {
  if (i < 0 || i > n) throw InvalidParameter("join_turan requires 0 <= i <= n");
  Count total = 0;
  for (int j = 0; j <= k && j <= i; ++j) {
    const Count rest = (k - j == 0) ? 1 : turan_clique_count(n - i, r, k - j);
    total = checked_add(total, checked_mul(binomial(i, j), rest));
  }
  return total;
}

}  // namespace berge_turan
