// Acceptance run: one PASS/FAIL line per criterion. Exit status is 0 when
// every criterion passes, 3 when a sandwich inequality is violated, 1 otherwise.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "berge_turan/augmentation.hpp"
#include "berge_turan/berge.hpp"
#include "berge_turan/cliques.hpp"
#include "berge_turan/extremal.hpp"
#include "berge_turan/families.hpp"
#include "berge_turan/hypergraph.hpp"
#include "berge_turan/inequality.hpp"
#include "berge_turan/symmetrizer.hpp"

namespace bt = berge_turan;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

bool sandwich_violated = false;

bool run(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const bt::InvariantViolation& e) {
    sandwich_violated = true;
    out.fail(std::string("invariant violation: ") + e.what());
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (out.ok && secs > budget_s) out.fail("over time budget of " + std::to_string(budget_s) + " s");
  std::printf("%s %d %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs, out.detail.empty() ? "" : ": ",
              out.detail.c_str());
  std::fflush(stdout);
  return out.ok;
}

const std::vector<std::pair<std::string, bt::Graph>>& sandwich_family() {
  static const std::vector<std::pair<std::string, bt::Graph>> fs{{"K3", bt::complete_graph(3)},
                                                                 {"K4", bt::complete_graph(4)},
                                                                 {"P3", bt::path_graph(3)},
                                                                 {"C4", bt::cycle_graph(4)}};
  return fs;
}

constexpr int kSandwichMaxN = 7;

Outcome turan_closed_form() {
  Outcome o;
  for (int n = 1; n <= 12; ++n)
    for (int r = 1; r <= n; ++r)
      for (int k = 1; k <= n; ++k)
        if (bt::turan_clique_count(n, r, k) != bt::count_cliques(bt::turan_graph(n, r), k))
          o.fail("mismatch at n=" + std::to_string(n) + " r=" + std::to_string(r) + " k=" + std::to_string(k));
  return o;
}

Outcome zykov(int workers, std::vector<std::string>* log) {
  Outcome o;
  bt::SearchConfig cfg;
  cfg.workers = workers;
  for (const auto& [s, t] : {std::pair{3, 4}, std::pair{3, 5}, std::pair{4, 5}})
    for (int n = 1; n <= 8; ++n) {
      const auto r = bt::ex_generalized(n, s, bt::complete_graph(t), cfg);
      if (r.value != bt::turan_clique_count(n, t - 1, s))
        o.fail("ex(" + std::to_string(n) + ",K" + std::to_string(s) + ",K" + std::to_string(t) + ") = " +
               std::to_string(r.value));
      if (log) log->push_back(std::to_string(r.value) + " " + r.witness_certificate);
    }
  return o;
}

Outcome sandwich() {
  Outcome o;
  for (const auto& [name, f] : sandwich_family())
    for (int n = 1; n <= kSandwichMaxN; ++n) {
      const auto rep = bt::verify_sandwich(n, 3, f, bt::SearchConfig{});
      if (!rep.complete()) o.fail(name + " n=" + std::to_string(n) + " was refused");
    }
  return o;
}

Outcome equ_cases() {
  Outcome o;
  for (int k = 3; k <= 4; ++k)
    for (int r = k; r <= 200; ++r)
      if (!bt::eq_check(k, r).contradiction) o.fail("no contradiction at k=" + std::to_string(k) + " r=" + std::to_string(r));
  const auto five = bt::eq_check(5, 5);
  if (five.contradiction || five.lhs != bt::RationalValue(1) || five.rhs != bt::RationalValue(1))
    o.fail("(5,5) is " + bt::to_string(five.lhs) + " vs " + bt::to_string(five.rhs));
  const auto eleven = bt::eq_check(11, 11);
  const bt::RationalValue single(bt::BigInt(8), bt::BigInt(8));  // C(8,7)/8
  if (eleven.terms.at(11 - 4) != single || !(single >= eleven.rhs)) o.fail("(11,11) single term below rhs");
  return o;
}

bt::Hypergraph random_hypergraph(int n, int k, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  bt::Hypergraph h(n, k);
  for (bt::VertexMask s = 0; s < (bt::VertexMask{1} << n); ++s)
    if (std::popcount(s) == k && coin(rng)) h.insert(s);
  return h;
}

Outcome berge_oracle() {
  Outcome o;
  const bt::Graph fs[] = {bt::path_graph(3), bt::complete_graph(3), bt::cycle_graph(4), bt::complete_graph(4)};
  std::mt19937_64 rng(20240501);
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto h = random_hypergraph(n, 3, 0.1 + 0.05 * static_cast<double>(rng() % 8), rng);
    const auto& f = fs[t % 4];
    const auto fast = bt::contains_berge(h, f);
    if (fast.has_value() != bt::contains_berge_oracle(h, f)) o.fail("disagree on " + bt::hypergraph_to_text(h));
    if (fast && !bt::is_valid_berge_witness(h, f, *fast)) o.fail("invalid witness on " + bt::hypergraph_to_text(h));
  }
  const auto tri = bt::complete_graph(3);
  for (unsigned s = 0; s < 16; ++s) {
    bt::Hypergraph h(4, 3);
    for (int j = 0; j < 4; ++j)
      if ((s >> j) & 1U) h.insert(bt::prefix_mask(4) & ~bt::bit(j));
    if (bt::contains_berge(h, tri).has_value() != bt::contains_berge_oracle(h, tri))
      o.fail("disagree on " + bt::hypergraph_to_text(h));
  }
  return o;
}

Outcome constructions() {
  Outcome o;
  const auto k4 = bt::complete_graph(4);
  for (int n = 1; n <= 6; ++n)
    for (const auto& c : bt::enumerate_free_graphs(n, k4))
      if (bt::contains_berge(bt::clique_hypergraph(c.graph, 3), k4)) o.fail("Berge-K4 in triangles of " + c.form.certificate);
  for (const auto& f : {bt::complete_graph(3), bt::complete_graph(4), bt::cycle_graph(5)})
    for (int k = 3; k <= 4; ++k)
      if (!bt::contains_berge(bt::expansion(f, k), f)) o.fail("expansion misses F, k=" + std::to_string(k));
  return o;
}

Outcome symmetrization() {
  Outcome o;
  for (const int n : {9, 12}) {
    const auto target = bt::turan_clique_count(n, 3, 3);
    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto s = bt::run_symmetrization(n, 3, bt::complete_graph(4), seed, 100000, 4);
      for (std::size_t i = 1; i < s.g_history.size(); ++i)
        if (s.g_history[i].second < s.g_history[i - 1].second) o.fail("g decreased, seed " + std::to_string(seed));
      if (s.g() >= target) ++hits;
    }
    std::printf("  n=%d: %d/20 seeds reach %llu\n", n, hits, static_cast<unsigned long long>(target));
    if (hits < 19) o.fail("n=" + std::to_string(n) + " only " + std::to_string(hits) + "/20 seeds");
  }
  return o;
}

void sandwich_results(int workers, std::vector<std::string>& log) {
  bt::SearchConfig cfg;
  cfg.workers = workers;
  for (const auto& [name, f] : sandwich_family())
    for (int n = 1; n <= kSandwichMaxN; ++n)
      for (const auto& r : {bt::ex_edges(n, f, cfg), bt::ex_generalized(n, 3, f, cfg), bt::ex_colored(n, 3, f, cfg),
                            bt::ex_berge(n, 3, f, cfg)})
        log.push_back(bt::to_string(r.problem) + " " + name + " " + std::to_string(n) + " " + std::to_string(r.value) +
                      " " + r.witness_certificate);
}

Outcome determinism() {
  Outcome o;
  std::vector<std::string> one;
  std::vector<std::string> four;
  zykov(1, &one);
  zykov(4, &four);
  sandwich_results(1, one);
  sandwich_results(4, four);
  if (one.size() != four.size()) o.fail("different result counts");
  for (std::size_t i = 0; i < std::min(one.size(), four.size()); ++i)
    if (one[i] != four[i]) o.fail("'" + one[i] + "' vs '" + four[i] + "'");
  if (o.ok) o.detail = std::to_string(one.size()) + " results identical";
  return o;
}

}  // namespace

int main() {
  bool all = true;
  all &= run(1, "Turan clique closed form, n <= 12", 10, turan_closed_form);
  all &= run(2, "Zykov: ex(n,K_s,K_t) on Turan graphs, n <= 8", 600, [] { return zykov(1, nullptr); });
  all &= run(3, "sandwich bounds for K3, K4, P3, C4, k = 3, n <= 7", 1800, sandwich);
  all &= run(4, "exact case analysis of the clique inequality", 1, equ_cases);
  all &= run(5, "Berge search agrees with the exhaustive oracle", 300, berge_oracle);
  all &= run(6, "triangle hypergraphs of K4-free graphs, expansions", 600, constructions);
  all &= run(7, "symmetrization reaches T(n,3) for n = 9, 12", 600, symmetrization);
  all &= run(8, "workers 1 and 4 give identical values and certificates", 3600, determinism);
  if (sandwich_violated) return 3;
  return all ? 0 : 1;
}
