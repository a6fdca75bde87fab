#include <gtest/gtest.h>

#include "berge_turan/families.hpp"
#include "berge_turan/inequality.hpp"
#include "berge_turan/report.hpp"
#include "berge_turan/symmetrizer.hpp"
#include "oracles.hpp"

namespace bt = berge_turan;

namespace {

// Exact lhs and rhs scaled by 2^{k-1}, with binomials by the multiplicative
// formula in 128-bit integers.
std::pair<unsigned __int128, unsigned __int128> equ_scaled(int k, int r) {
  unsigned __int128 lhs = 0;
  for (int i = 0; i <= k - 3; ++i)
    lhs += static_cast<unsigned __int128>(oracle::choose(k - 3, i)) * oracle::choose(r - k + 3, k - 1 - i) << i;
  const unsigned __int128 rhs = static_cast<unsigned __int128>(oracle::choose(r - 1, k - 1)) << (k - 1);
  return {lhs, rhs};
}

bool monotone(const bt::SymmetrizationState& s) {
  for (std::size_t i = 1; i < s.g_history.size(); ++i)
    if (s.g_history[i].second < s.g_history[i - 1].second) return false;
  return true;
}

}  // namespace

TEST(Symmetrize, CloneRestoresIsolatedVertex) {
  auto g = bt::turan_graph(10, 3);
  g.isolate(9);
  bt::SymmetrizationState st{bt::BlueRedGraph(g), 3, bt::complete_graph(4), {}, 0, {}};
  const auto before = bt::g_value(st.current, 3);
  const auto move = bt::symmetrize_step(st, 9, bt::bit(0));
  ASSERT_TRUE(move);
  EXPECT_EQ(move->g_before, before);
  EXPECT_EQ(move->g_after, bt::turan_clique_count(10, 3, 3));
  EXPECT_EQ(st.moves_applied, 1);
  EXPECT_TRUE(bt::isomorphic(st.current.graph(), bt::turan_graph(10, 3)));
}

TEST(Symmetrize, CloneOfCloneIsRejected) {
  bt::SymmetrizationState st{bt::BlueRedGraph(bt::turan_graph(9, 3)), 3, bt::complete_graph(4), {}, 0, {}};
  EXPECT_FALSE(bt::symmetrize_step(st, 3, bt::bit(0)));
  EXPECT_EQ(st.moves_applied, 0);
}

TEST(Symmetrize, MoveCreatingForbiddenGraphIsRejected) {
  // Two red edges. Copying 0's red neighborhood gives u = 4 the red edge
  // 4-1, which raises g from 2 to 3 but makes 1 the center of a P3.
  const auto g = bt::Graph::from_edges(5, {{0, 1}, {2, 3}});
  bt::SymmetrizationState st{bt::BlueRedGraph(g, g), 3, bt::path_graph(3), {}, 0, {}};
  EXPECT_FALSE(bt::symmetrize_step(st, 4, bt::bit(0)));
}

TEST(Symmetrize, RedNeighborsAreCopiedRed) {
  const auto g = bt::Graph::from_edges(4, {{0, 1}, {1, 2}});
  const bt::BlueRedGraph br(g, bt::Graph::from_edges(4, {{0, 1}}));
  const auto out = bt::symmetrized(br, 3, bt::bit(0));
  EXPECT_TRUE(out.is_red(3, 1));
  EXPECT_EQ(out.graph().degree(3), 1);
}

TEST(Symmetrize, Errors) {
  bt::SymmetrizationState st{bt::BlueRedGraph(bt::complete_graph(3)), 3, bt::complete_graph(4), {}, 0, {}};
  EXPECT_THROW(bt::symmetrize_step(st, 0, bt::bit(0) | bt::bit(1)), bt::InvalidParameter);
  EXPECT_THROW(bt::symmetrize_step(st, 0, 0), bt::InvalidParameter);
  EXPECT_THROW(bt::run_symmetrization(6, 2, bt::complete_graph(4), 1, 10), bt::InvalidParameter);
}

TEST(Symmetrize, ZeroBudgetReturnsSeed) {
  const auto a = bt::run_symmetrization(9, 3, bt::complete_graph(4), 5, 0);
  EXPECT_EQ(a.moves_applied, 0);
  ASSERT_EQ(a.g_history.size(), 1);
  EXPECT_EQ(a.g_history[0].first, 0);
  // r-partite seed with r = chi(F) - 1 = 3.
  EXPECT_LE(bt::chromatic_number(a.current.graph()), 3);
  EXPECT_TRUE(a.current.red().size() == 0);
}

TEST(Symmetrize, Reproducible) {
  const auto a = bt::run_symmetrization(10, 3, bt::complete_graph(4), 42, 4000);
  const auto b = bt::run_symmetrization(10, 3, bt::complete_graph(4), 42, 4000, 4);
  EXPECT_EQ(a.current, b.current);
  EXPECT_EQ(a.g_history, b.g_history);
  const auto c = bt::run_symmetrization(10, 3, bt::complete_graph(4), 43, 4000);
  EXPECT_TRUE(monotone(c));
}

TEST(Symmetrize, ReachesTuranConstructionAtTen) {
  const auto target = bt::turan_clique_count(10, 3, 3);
  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto s = bt::run_symmetrization(10, 3, bt::complete_graph(4), seed, 20000);
    EXPECT_TRUE(monotone(s));
    EXPECT_FALSE(bt::contains_subgraph(s.current.graph(), bt::complete_graph(4)));
    if (s.g() >= target) ++hits;
  }
  EXPECT_GE(hits, 4);
}

TEST(Symmetrize, WarnsInDegenerateRegime) {
  const auto s = bt::run_symmetrization(8, 3, bt::cycle_graph(5), 1, 500);
  ASSERT_EQ(s.warnings.size(), 1);
  EXPECT_NE(s.warnings[0].find("degenerate"), std::string::npos);
  EXPECT_FALSE(bt::contains_subgraph(s.current.graph(), bt::cycle_graph(5)));
  EXPECT_TRUE(bt::run_symmetrization(8, 3, bt::complete_graph(5), 1, 100).warnings.empty());
}

TEST(Equ, KnownValues) {
  const auto a = bt::eq_check(3, 3);
  EXPECT_EQ(a.lhs, bt::RationalValue(3, 4));
  EXPECT_EQ(a.rhs, bt::RationalValue(1));
  EXPECT_TRUE(a.contradiction);

  const auto b = bt::eq_check(5, 5);
  EXPECT_EQ(b.lhs, bt::RationalValue(1));
  EXPECT_EQ(b.rhs, bt::RationalValue(1));
  EXPECT_TRUE(b.holds);
  EXPECT_FALSE(b.contradiction);
  EXPECT_EQ(b.terms[1], bt::RationalValue(1, 4));
  EXPECT_EQ(b.terms[2], bt::RationalValue(3, 4));

  const auto c = bt::eq_check(4, 6);
  EXPECT_EQ(c.lhs, bt::RationalValue(15, 4));
  EXPECT_EQ(c.rhs, bt::RationalValue(10));
  EXPECT_TRUE(c.contradiction);
}

TEST(Equ, ElevenElevenTermMeetsRhs) {
  const auto e = bt::eq_check(11, 11);
  ASSERT_EQ(e.terms.size(), 9);
  EXPECT_EQ(e.terms[11 - 4], bt::RationalValue(1));
  EXPECT_EQ(e.rhs, bt::RationalValue(1));
  EXPECT_GE(e.terms[11 - 4], e.rhs);
  EXPECT_TRUE(e.holds);
  for (int k = 12; k <= 20; ++k) EXPECT_GT(bt::eq_check(k, k).terms[k - 4], bt::eq_check(k, k).rhs) << k;
}

TEST(Equ, LowUniformityAlwaysContradicts) {
  for (int k = 3; k <= 4; ++k)
    for (int r = k; r <= 200; ++r) EXPECT_TRUE(bt::eq_check(k, r).contradiction) << k << " " << r;
}

TEST(Equ, AgreesWithMultiplicativeBinomials) {
  for (int k = 3; k <= 12; ++k)
    for (int r = k; r <= 80; ++r) {
      const auto rep = bt::eq_check(k, r);
      const auto [lhs, rhs] = equ_scaled(k, r);
      const bt::BigInt scale = bt::BigInt(1) << (k - 1);
      const bt::RationalValue l(bt::BigInt(static_cast<std::uint64_t>(lhs >> 64)) * (bt::BigInt(1) << 64) +
                                    bt::BigInt(static_cast<std::uint64_t>(lhs)),
                                scale);
      EXPECT_EQ(rep.lhs, l) << k << " " << r;
      EXPECT_EQ(rep.contradiction, lhs < rhs) << k << " " << r;
      EXPECT_GT(rep.lhs.denominator(), 0);
    }
}

TEST(Equ, ScanFindsThresholdForEveryK) {
  for (int k = 3; k <= 12; ++k) {
    const auto s = bt::scan_equ(k, 10000);
    ASSERT_TRUE(s.threshold) << k;
    EXPECT_LE(*s.threshold, 10000);
    EXPECT_EQ(s.rows.size(), 10000 - k + 1);
    for (const auto& row : s.rows) {
      if (row.r >= *s.threshold) {
        EXPECT_TRUE(row.contradiction);
      }
    }
  }
  EXPECT_EQ(bt::scan_equ(3, 100).contradiction_at.size(), 98);
  EXPECT_EQ(*bt::scan_equ(5, 100).threshold, 6);
}

TEST(Equ, Errors) {
  EXPECT_THROW(bt::eq_check(2, 5), bt::InvalidParameter);
  EXPECT_THROW(bt::eq_check(5, 4), bt::InvalidParameter);
  EXPECT_THROW(bt::scan_equ(2, 10), bt::InvalidParameter);
  EXPECT_TRUE(bt::scan_equ(6, 5).rows.empty());
}

TEST(Report, K4) {
  const auto rep = bt::conjecture_report(6, 3, bt::complete_graph(4));
  EXPECT_FALSE(rep.degenerate());
  EXPECT_EQ(rep.facts.chi, 4);
  EXPECT_TRUE(rep.facts.critical_vertex);
  EXPECT_EQ(rep.facts.critical_edge_components, 1);
  ASSERT_EQ(rep.rows.size(), 3);
  EXPECT_EQ(rep.rows.front().n, 4);
  for (const auto& row : rep.rows) {
    EXPECT_FALSE(row.incomplete());
    EXPECT_EQ(*row.component_prediction, bt::turan_clique_count(row.n, 3, 3));
  }
  const auto has = [&](const std::string& key) {
    return std::any_of(rep.facts.applicable.begin(), rep.facts.applicable.end(),
                       [&](const std::string& s) { return s.find(key) != std::string::npos; });
  };
  EXPECT_TRUE(has("critical-vertex"));
  EXPECT_TRUE(has("low-uniformity"));
}

TEST(Report, DegenerateFlags) {
  const auto c5 = bt::conjecture_report(5, 3, bt::cycle_graph(5));
  EXPECT_TRUE(c5.degenerate());
  EXPECT_TRUE(c5.facts.applicable.empty());
  const auto bow = bt::conjecture_report(5, 3, bt::book_graph(2));
  EXPECT_EQ(bow.facts.chi, 3);
  EXPECT_TRUE(bow.degenerate());
}

TEST(Report, RowsBeyondCapsAreIncomplete) {
  const auto rep = bt::conjecture_report(8, 3, bt::complete_graph(3));
  EXPECT_TRUE(rep.rows.back().incomplete());
  EXPECT_EQ(rep.rows.back().sandwich.refused, std::vector<std::string>{"ex-berge"});
  EXPECT_FALSE(rep.rows.front().incomplete());
}

TEST(Report, TwoDisjointCliques) {
  const auto facts = bt::hypothesis_facts(bt::two_cliques(3), 3);
  EXPECT_EQ(facts.chi, 4);
  EXPECT_EQ(facts.critical_edge_components, 2);
  EXPECT_FALSE(facts.critical_vertex);
}
