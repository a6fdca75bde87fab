#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "berge_turan/cli.hpp"
#include "berge_turan/families.hpp"
#include "berge_turan/graph_json.hpp"

namespace bt = berge_turan;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "berge-turan");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = bt::cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

class CacheDir : public ::testing::Test {
 protected:
  void SetUp() override {
    path_ = std::filesystem::temp_directory_path() /
            ("bt_cache_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name() + ".jsonl");
    std::filesystem::remove(path_);
    ::setenv("BERGE_TURAN_CACHE", path_.c_str(), 1);
  }
  void TearDown() override {
    std::filesystem::remove(path_);
    ::unsetenv("BERGE_TURAN_CACHE");
  }
  std::filesystem::path path_;
};

}  // namespace

TEST(Cli, TuranCount) {
  const auto r = cli({"turan", "--n", "6", "--r", "3", "--k", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "8\n");
  EXPECT_EQ(cli({"turan", "--n", "6", "--r", "3", "--k", "3", "--apex", "1"}).out, "12\n");  // K_1 + T(5,3): 4 + 8
}

TEST(Cli, IneqScanCsv) {
  const auto r = cli({"ineq", "--k", "3", "--r-max", "10"});
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 9);
  EXPECT_EQ(ls[0], "k,r,lhs,rhs,contradiction");
  EXPECT_EQ(ls[1], "3,3,3/4,1,true");
  for (std::size_t i = 1; i < ls.size(); ++i) EXPECT_TRUE(ls[i].ends_with(",true")) << ls[i];
  EXPECT_EQ(lines(cli({"ineq", "--k", "5", "--r", "5"}).out).at(1), "5,5,1,1,false");
}

TEST(Cli, SandwichJson) {
  const auto r = cli({"--no-cache", "sandwich", "--n", "6", "--k", "3", "--f", "K4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["ex_gen"], 8);
  EXPECT_EQ(j["ex_berge"], 8);
  EXPECT_EQ(j["ex_col"], 12);
  EXPECT_EQ(j["ex"], 12);
  EXPECT_TRUE(j["gen_le_berge"].get<bool>());
  EXPECT_TRUE(j["berge_le_col"].get<bool>());
  EXPECT_TRUE(j["col_le_gen_plus_ex"].get<bool>());
  EXPECT_TRUE(j["berge_equals_gen"].get<bool>());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({}).code, 1);
  EXPECT_EQ(cli({"frobnicate"}).code, 1);
  EXPECT_EQ(cli({"ex", "--n", "5"}).code, 1);
  EXPECT_EQ(cli({"ex", "--n", "5", "--f", "not-a-graph!"}).code, 1);
  EXPECT_EQ(cli({"ex-gen", "--n", "5", "--k", "1", "--f", "K3", "--no-cache"}).code, 1);
  const auto refused = cli({"ex", "--n", "12", "--f", "K3", "--no-cache"});
  EXPECT_EQ(refused.code, 2);
  EXPECT_NE(refused.err.find("cap"), std::string::npos);
  EXPECT_EQ(cli({"ex-berge", "--n", "5", "--k", "6", "--f", "K3", "--no-cache"}).code, 2);
  EXPECT_EQ(cli({"--no-cache", "sandwich", "--n", "8", "--k", "3", "--f", "K3"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, InvariantsOutput) {
  const auto j = nlohmann::json::parse(cli({"invariants", "--f", "K4"}).out);
  EXPECT_EQ(j["chi"], 4);
  EXPECT_EQ(j["sigma"], 1);
  EXPECT_EQ(j["critical_edges"].size(), 6);
}

TEST(Cli, BergeCheckAndExpansion) {
  const auto r = cli({"berge-check", "--hypergraph", "3 5 : 0 1 2 ; 1 2 3 ; 2 3 4 ; 0 3 4", "--f", "K3", "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["contains"].get<bool>());
  EXPECT_TRUE(j["oracle"].get<bool>());
  const auto none = nlohmann::json::parse(cli({"berge-check", "--hypergraph", "3 4 : 0 1 2", "--f", "K3"}).out);
  EXPECT_FALSE(none["contains"].get<bool>());
  EXPECT_EQ(cli({"expansion", "--f", "K3", "--k", "4"}).out, "4 9 : 0 1 3 4 ; 0 2 5 6 ; 1 2 7 8\n");
}

TEST(Cli, SymmetrizeHistory) {
  const auto csv = std::filesystem::temp_directory_path() / "bt_history_test.csv";
  const auto r = cli({"symmetrize", "--n", "9", "--k", "3", "--f", "K4", "--seed", "3", "--budget", "20000",
                      "--history-csv", csv.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["g"], 27);
  EXPECT_EQ(bt::graph6_decode(j["graph6"].get<std::string>()).order(), 9);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "step,g");
  std::filesystem::remove(csv);
}

TEST(Cli, ConjectureReport) {
  const auto r = cli({"conjecture-report", "--n-max", "6", "--k", "3", "--f", "K4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rows"].size(), 3);
  EXPECT_EQ(j["rows"][2]["berge=gen"], "yes");
  EXPECT_FALSE(j["facts"]["degenerate"].get<bool>());
}

TEST_F(CacheDir, StoresAndVerifies) {
  const auto first = cli({"ex-gen", "--n", "7", "--k", "3", "--f", "K4"});
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_FALSE(nlohmann::json::parse(first.out)["cached"].get<bool>());
  const auto second = cli({"ex-gen", "--n", "7", "--k", "3", "--f", "K4", "--verify-cache"});
  ASSERT_EQ(second.code, 0) << second.err;
  const auto j = nlohmann::json::parse(second.out);
  EXPECT_TRUE(j["cached"].get<bool>());
  EXPECT_EQ(j["value"], 12);
  EXPECT_NE(second.err.find("verified"), std::string::npos);
}

TEST_F(CacheDir, TamperedEntryIsRejected) {
  ASSERT_EQ(cli({"ex", "--n", "6", "--f", "K3"}).code, 0);
  std::ifstream in(path_);
  std::string line;
  std::getline(in, line);
  in.close();
  auto j = nlohmann::json::parse(line);
  j["value"] = 10;
  std::ofstream(path_) << j.dump() << '\n';
  EXPECT_EQ(cli({"ex", "--n", "6", "--f", "K3"}).code, 3);
}

TEST_F(CacheDir, WrongCachedValueFailsVerification) {
  ASSERT_EQ(cli({"ex", "--n", "5", "--f", "K3"}).code, 0);
  std::ifstream in(path_);
  std::string line;
  std::getline(in, line);
  in.close();
  // A valid K3-free witness with fewer edges than the optimum passes
  // revalidation but not recomputation.
  auto j = nlohmann::json::parse(line);
  const auto c5 = bt::cycle_graph(5);
  j["value"] = 5;
  j["witness"]["graph6"] = bt::graph6_encode(c5);
  j["witness_certificate"] = bt::certificate(c5);
  std::ofstream(path_) << j.dump() << '\n';
  EXPECT_EQ(cli({"ex", "--n", "5", "--f", "K3"}).code, 0);
  EXPECT_EQ(cli({"ex", "--n", "5", "--f", "K3", "--verify-cache"}).code, 3);
}

TEST(ParseForbidden, NamedAndEncoded) {
  EXPECT_EQ(bt::parse_forbidden("K4"), bt::complete_graph(4));
  EXPECT_EQ(bt::parse_forbidden("C5"), bt::cycle_graph(5));
  EXPECT_EQ(bt::parse_forbidden("P3"), bt::path_graph(3));
  EXPECT_EQ(bt::parse_forbidden("B_3_1"), bt::book_graph(3));
  EXPECT_EQ(bt::parse_forbidden("bowtie"), bt::book_graph(2));
  EXPECT_EQ(bt::parse_forbidden("2K_4"), bt::two_cliques(3));
  EXPECT_EQ(bt::parse_forbidden("T_6_3"), bt::turan_graph(6, 3));
  EXPECT_EQ(bt::parse_forbidden("petersen").size(), 15);
  EXPECT_EQ(bt::parse_forbidden("D~{"), bt::graph6_decode("D~{"));
  EXPECT_EQ(bt::parse_forbidden("D~{"), bt::complete_graph(5));
  EXPECT_THROW(bt::parse_forbidden(""), bt::InvalidInput);
  EXPECT_THROW(bt::parse_forbidden("C2"), bt::InvalidInput);
  EXPECT_THROW(bt::parse_forbidden("K99"), bt::InvalidInput);
}

TEST(ParseForbidden, JsonFileMatchesGraph6) {
  const auto path = std::filesystem::temp_directory_path() / "bt_forbidden_test.json";
  const auto g = bt::petersen_graph();
  std::ofstream(path) << bt::graph_to_json(g).dump();
  EXPECT_EQ(bt::parse_forbidden("@" + path.string()), bt::parse_forbidden(bt::graph6_encode(g)));
  std::filesystem::remove(path);
  EXPECT_THROW(bt::parse_forbidden("@" + path.string()), bt::InvalidInput);
}
