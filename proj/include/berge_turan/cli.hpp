#pragma once

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "berge_turan/berge.hpp"
#include "berge_turan/cliques.hpp"
#include "berge_turan/error.hpp"
#include "berge_turan/extremal.hpp"
#include "berge_turan/graph.hpp"
#include "berge_turan/graph6.hpp"
#include "berge_turan/graph_json.hpp"
#include "berge_turan/hypergraph.hpp"
#include "berge_turan/inequality.hpp"
#include "berge_turan/invariants.hpp"
#include "berge_turan/report.hpp"
#include "berge_turan/symmetrizer.hpp"
#include "json.hpp"

namespace berge_turan {

inline constexpr const char* kToolkitVersion = "0.1.0";

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Named token (K4, C5, P3, T_6_3, B_3_1, 2K_4, bowtie, petersen), a graph6
/// string, or @file.json.
inline Graph parse_forbidden(const std::string& spec) {
  if (spec.empty()) throw InvalidInput("empty graph spec");
  if (spec[0] == '@') return graph_from_json_text(read_file(spec.substr(1)));
  if (spec == "bowtie") return book_graph(2);
  if (spec == "petersen") return petersen_graph();
  std::smatch m;
  auto num = [&](int i) {
    const long v = std::stol(m[i].str());
    if (v > Graph::kMaxVertices) throw InvalidInput("graph spec out of range: " + spec);
    return static_cast<int>(v);
  };
  try {
    static const std::regex named(R"(([KCP])(\d+))");
    static const std::regex turan(R"(T_(\d+)_(\d+))");
    static const std::regex book(R"(B_(\d+)_1)");
    static const std::regex twice(R"(2K_?(\d+))");
    if (std::regex_match(spec, m, named)) {
      const int v = num(2);
      switch (m[1].str()[0]) {
        case 'K': return complete_graph(v);
        case 'C':
          if (v < 3) throw InvalidInput("cycle needs at least 3 vertices: " + spec);
          return cycle_graph(v);
        default: return path_graph(v);
      }
    }
    if (std::regex_match(spec, m, turan)) return turan_graph(num(1), num(2));
    if (std::regex_match(spec, m, book)) {
      if (num(1) < 1) throw InvalidInput("book needs r >= 1: " + spec);
      return book_graph(num(1));
    }
    if (std::regex_match(spec, m, twice)) {
      if (num(1) < 2) throw InvalidInput("2K_m needs m >= 2: " + spec);
      return two_cliques(num(1) - 1);
    }
  } catch (const InvalidParameter& e) {
    throw InvalidInput(std::string("bad graph spec '") + spec + "': " + e.what());
  }
  try {
    return graph6_decode(spec);
  } catch (const InvalidInput&) {
    throw InvalidInput("unparsable graph spec: '" + spec + "'");
  }
}

inline Hypergraph parse_hypergraph(const std::string& spec) {
  const std::string text = !spec.empty() && spec[0] == '@' ? read_file(spec.substr(1)) : spec;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return hypergraph_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("malformed hypergraph JSON: ") + e.what());
    }
  }
  return hypergraph_from_text(text);
}

inline nlohmann::ordered_json edges_json(const Graph& g) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) arr.push_back({u, v});
  return arr;
}

inline nlohmann::ordered_json witness_json(const Witness& w) {
  nlohmann::ordered_json j;
  if (const auto* g = std::get_if<Graph>(&w)) {
    j["type"] = "graph";
    j["graph6"] = graph6_encode(*g);
  } else if (const auto* br = std::get_if<BlueRedGraph>(&w)) {
    j["type"] = "blue-red";
    j["graph6"] = graph6_encode(br->graph());
    j["red_edges"] = edges_json(br->red());
  } else {
    j["type"] = "hypergraph";
    j["text"] = hypergraph_to_text(std::get<Hypergraph>(w));
  }
  return j;
}

inline Witness witness_from_json(const nlohmann::json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "graph") return graph6_decode(j.at("graph6").get<std::string>());
  if (type == "blue-red") {
    Graph g = graph6_decode(j.at("graph6").get<std::string>());
    Graph red(g.order());
    for (const auto& e : j.at("red_edges")) red.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return BlueRedGraph(std::move(g), std::move(red));
  }
  if (type == "hypergraph") return hypergraph_from_text(j.at("text").get<std::string>());
  throw InvalidInput("unknown witness type in cache: " + type);
}

/// Append-only JSON-lines store of extremal results keyed by
/// (problem, n, k, certificate of F).
class ResultCache {
 public:
  explicit ResultCache(std::string path) : path_(std::move(path)) {}

  static std::string default_path() {
    if (const char* env = std::getenv("BERGE_TURAN_CACHE"); env && *env) return env;
    return "berge_turan_cache.jsonl";
  }

  [[nodiscard]] const std::string& path() const noexcept { return path_; }

  std::optional<ExtremalResult> find(Problem p, int n, int k, const Graph& f) const {
    std::ifstream in(path_);
    if (!in) return std::nullopt;
    const std::string key = make_key(p, n, k, certificate(f));
    std::optional<ExtremalResult> hit;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception&) {
        continue;  // a torn write from an interrupted run
      }
      if (j.value("key", "") != key) continue;
      ExtremalResult r;
      r.problem = p;
      r.n = n;
      r.k = k;
      r.forbidden = f;
      r.forbidden_certificate = certificate(f);
      r.value = j.at("value").get<Count>();
      r.witness = witness_from_json(j.at("witness"));
      r.witness_certificate = j.at("witness_certificate").get<std::string>();
      hit = std::move(r);
    }
    return hit;
  }

  void store(const ExtremalResult& r) {
    const std::lock_guard lock(mutex_);
    std::ofstream out(path_, std::ios::app);
    if (!out) return;  // caching is best effort
    nlohmann::ordered_json j;
    j["key"] = make_key(r.problem, r.n, r.k, r.forbidden_certificate);
    j["problem"] = to_string(r.problem);
    j["n"] = r.n;
    j["k"] = r.k;
    j["forbidden"] = r.forbidden_certificate;
    j["value"] = r.value;
    j["witness"] = witness_json(r.witness);
    j["witness_certificate"] = r.witness_certificate;
    j["version"] = kToolkitVersion;
    j["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch()).count();
    out << j.dump() << '\n';
  }

 private:
  static std::string make_key(Problem p, int n, int k, const std::string& cert) {
    return to_string(p) + "/" + std::to_string(n) + "/" + std::to_string(k) + "/" + cert;
  }

  std::string path_;
  std::mutex mutex_;
};

namespace detail {

// Aligned text table.
inline void print_table(std::ostream& out, const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out << std::left << std::setw(static_cast<int>(width[c])) << cells[c];
      if (c + 1 < cells.size()) out << "  ";
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

inline void print_csv(std::ostream& out, const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << cells[c];
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

inline std::string opt(const std::optional<Count>& v) { return v ? std::to_string(*v) : ""; }

inline nlohmann::ordered_json opt_json(const std::optional<Count>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

struct Options {
  std::string format;
  int workers = 1;
  bool no_cache = false;
  bool verify_cache = false;
  SearchConfig caps;
};

// Emits a single record in the chosen format.
inline void emit(std::ostream& out, const std::string& format, const nlohmann::ordered_json& record) {
  if (format == "json") {
    out << record.dump() << '\n';
    return;
  }
  std::vector<std::string> header;
  std::vector<std::string> row;
  for (const auto& [key, value] : record.items()) {
    header.push_back(key);
    row.push_back(value.is_string() ? value.get<std::string>() : value.dump());
  }
  if (format == "csv") {
    print_csv(out, header, {row});
  } else {
    print_table(out, header, {row});
  }
}

inline nlohmann::ordered_json result_json(const ExtremalResult& r, bool cached) {
  nlohmann::ordered_json j;
  j["problem"] = to_string(r.problem);
  j["n"] = r.n;
  j["k"] = r.k;
  j["forbidden"] = graph6_encode(r.forbidden);
  j["value"] = r.value;
  j["witness"] = witness_json(r.witness);
  j["witness_certificate"] = r.witness_certificate;
  j["nodes_explored"] = r.nodes_explored;
  j["wall_time_ms"] = std::chrono::duration<double, std::milli>(r.wall_time).count();
  j["cached"] = cached;
  return j;
}

inline ExtremalResult run_problem(Problem p, int n, int k, const Graph& f, const Options& o, std::ostream& err,
                                  bool& cached) {
  SearchConfig cfg = o.caps;
  cfg.workers = o.workers;
  auto compute = [&] {
    switch (p) {
      case Problem::EdgeTuran: return ex_edges(n, f, cfg);
      case Problem::GeneralizedTuran: return ex_generalized(n, k, f, cfg);
      case Problem::ColoredTuran: return ex_colored(n, k, f, cfg);
      default: return ex_berge(n, k, f, cfg);
    }
  };
  cached = false;
  if (o.no_cache) return compute();
  ResultCache cache(ResultCache::default_path());
  if (auto hit = cache.find(p, n, k, f)) {
    revalidate(*hit);
    if (o.verify_cache) {
      const auto fresh = compute();
      if (fresh.value != hit->value || fresh.witness_certificate != hit->witness_certificate)
        throw InvariantViolation("cache entry disagrees with recomputation for " + to_string(p));
      err << "cache verified: " << to_string(p) << " n=" << n << " k=" << k << '\n';
    }
    cached = true;
    return *hit;
  }
  auto r = compute();
  cache.store(r);
  return r;
}

}  // namespace detail

/// Parses argv, runs one subcommand, and returns the process exit status:
/// 0 success, 1 invalid input or usage, 2 cap refusal, 3 invariant violation.
inline int cli_dispatch(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact and heuristic tools for Berge-Turan and generalized Turan problems", "berge-turan"};
  app.set_version_flag("--version", kToolkitVersion);
  app.require_subcommand(1);
  app.fallthrough();
  detail::Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1, 256));
  app.add_flag("--no-cache", o.no_cache, "Bypass the result cache");
  app.add_flag("--verify-cache", o.verify_cache, "Recompute cache hits and compare");
  app.add_option("--graph-cap", o.caps.graph_cap, "Largest n for ex and ex-gen")->check(CLI::Range(1, 64));
  app.add_option("--colored-cap", o.caps.colored_cap, "Largest n for ex-col")->check(CLI::Range(1, 11));
  app.add_option("--berge-cap-k3", o.caps.berge_cap_k3, "Largest n for ex-berge with k <= 3")->check(CLI::Range(1, 64));
  app.add_option("--berge-cap-k4", o.caps.berge_cap_k4, "Largest n for ex-berge with k = 4, 5")->check(CLI::Range(1, 64));
  app.footer("Exit status: 0 ok, 1 invalid input, 2 cap refusal, 3 invariant violation.");

  int n = 0;
  int r = 0;
  int k = 3;
  int apex = 0;
  std::string fspec;
  std::string hspec;
  std::string gspec;
  std::uint64_t seed = 1;
  std::uint64_t budget = 100000;
  std::string history_csv;
  bool use_oracle = false;
  int r_max = 0;
  int n_max = 0;

  auto* turan = app.add_subcommand("turan", "Number of k-cliques in K_i + T(n - i, r), n vertices in total");
  turan->add_option("--n", n)->required();
  turan->add_option("--r", r)->required();
  turan->add_option("--k", k)->required();
  turan->add_option("--apex", apex, "Number of apex vertices i");

  auto* cliques = app.add_subcommand("cliques", "Count k-cliques of a graph");
  cliques->add_option("--graph", gspec, "Graph spec")->required();
  cliques->add_option("--k", k)->required();

  auto* invariants = app.add_subcommand("invariants", "Chromatic profile of F");
  invariants->add_option("--f", fspec)->required();

  auto* berge_check = app.add_subcommand("berge-check", "Search a hypergraph for a Berge copy of F");
  berge_check->add_option("--hypergraph", hspec, "Text 'k n : a b c ; ...', JSON, or @file")->required();
  berge_check->add_option("--f", fspec)->required();
  berge_check->add_flag("--oracle", use_oracle, "Also run the exhaustive checker");

  auto* expansion_cmd = app.add_subcommand("expansion", "The k-uniform expansion of F");
  expansion_cmd->add_option("--f", fspec)->required();
  expansion_cmd->add_option("--k", k)->required();

  std::vector<std::pair<CLI::App*, Problem>> ex_cmds;
  for (const auto& [name, p, help] : {std::tuple{"ex", Problem::EdgeTuran, "ex(n, F)"},
                                      std::tuple{"ex-gen", Problem::GeneralizedTuran, "ex(n, K_k, F)"},
                                      std::tuple{"ex-col", Problem::ColoredTuran, "ex^col(n, F) with k-cliques"},
                                      std::tuple{"ex-berge", Problem::BergeTuran, "ex_k(n, Berge-F)"}}) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--n", n)->required();
    cmd->add_option("--f", fspec)->required();
    if (p != Problem::EdgeTuran) cmd->add_option("--k", k)->required();
    ex_cmds.emplace_back(cmd, p);
  }

  auto* sandwich = app.add_subcommand("sandwich", "All four extremal numbers and the inequalities between them");
  sandwich->add_option("--n", n)->required();
  sandwich->add_option("--k", k)->required();
  sandwich->add_option("--f", fspec)->required();

  auto* symmetrize = app.add_subcommand("symmetrize", "Zykov-style local improvement of g");
  symmetrize->add_option("--n", n)->required();
  symmetrize->add_option("--k", k)->required();
  symmetrize->add_option("--f", fspec)->required();
  symmetrize->add_option("--seed", seed);
  symmetrize->add_option("--budget", budget, "Move attempts");
  symmetrize->add_option("--history-csv", history_csv, "Write g history (step,g) to this file");

  auto* ineq = app.add_subcommand("ineq", "Exact evaluation of the clique-counting inequality");
  ineq->add_option("--k", k)->required();
  auto* r_opt = ineq->add_option("--r", r);
  auto* rmax_opt = ineq->add_option("--r-max", r_max);
  r_opt->excludes(rmax_opt);

  auto* report = app.add_subcommand("conjecture-report", "Finite-n table around the Berge/generalized equality");
  report->add_option("--n-max", n_max)->required();
  report->add_option("--k", k)->required();
  report->add_option("--f", fspec)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code != 0) err << app.help();
    return code == 0 ? 0 : 1;
  }

  auto fmt = [&](const char* fallback) { return o.format.empty() ? std::string(fallback) : o.format; };

  try {
    if (turan->parsed()) {
      const Count c = join_turan_clique_count(apex, n, r, k);
      if (fmt("human") == "human") {
        out << c << '\n';
      } else {
        detail::emit(out, fmt("human"), {{"i", apex}, {"n", n}, {"r", r}, {"k", k}, {"count", c}});
      }
      return 0;
    }
    if (cliques->parsed()) {
      const Count c = count_cliques(parse_forbidden(gspec), k);
      if (fmt("human") == "human") {
        out << c << '\n';
      } else {
        detail::emit(out, fmt("human"), {{"k", k}, {"count", c}});
      }
      return 0;
    }
    if (invariants->parsed()) {
      const Graph f = parse_forbidden(fspec);
      const auto p = chromatic_profile(f);
      nlohmann::ordered_json j;
      j["graph6"] = graph6_encode(f);
      j["chi"] = p.chi;
      j["sigma"] = p.sigma;
      auto ce = nlohmann::ordered_json::array();
      for (const auto& [u, v] : p.critical_edges) ce.push_back({u, v});
      j["critical_edges"] = ce;
      j["critical_vertices"] = p.critical_vertices;
      j["has_critical_edge"] = p.has_critical_edge();
      j["has_critical_vertex"] = p.has_critical_vertex();
      detail::emit(out, fmt("json"), j);
      return 0;
    }
    if (berge_check->parsed()) {
      const Hypergraph h = parse_hypergraph(hspec);
      const Graph f = parse_forbidden(fspec);
      const auto w = contains_berge(h, f);
      nlohmann::ordered_json j;
      j["contains"] = w.has_value();
      if (w) {
        j["vertex_embedding"] = w->vertex_embedding;
        auto edges = nlohmann::ordered_json::array();
        for (VertexMask e : w->edge_assignment) edges.push_back(vertices_of(e));
        j["edge_assignment"] = edges;
      }
      if (use_oracle) {
        const bool o2 = contains_berge_oracle(h, f);
        j["oracle"] = o2;
        if (o2 != w.has_value()) throw InvariantViolation("Berge search and exhaustive oracle disagree");
      }
      detail::emit(out, fmt("json"), j);
      return 0;
    }
    if (expansion_cmd->parsed()) {
      const Hypergraph h = expansion(parse_forbidden(fspec), k);
      if (fmt("human") == "json") {
        out << hypergraph_to_json(h).dump() << '\n';
      } else {
        out << hypergraph_to_text(h) << '\n';
      }
      return 0;
    }
    for (const auto& [cmd, p] : ex_cmds) {
      if (!cmd->parsed()) continue;
      bool cached = false;
      const auto res = detail::run_problem(p, n, p == Problem::EdgeTuran ? 2 : k, parse_forbidden(fspec), o, err, cached);
      auto j = detail::result_json(res, cached);
      if (fmt("json") != "json") j["witness"] = j["witness"].dump();
      detail::emit(out, fmt("json"), j);
      return 0;
    }
    if (sandwich->parsed()) {
      const Graph f = parse_forbidden(fspec);
      SearchConfig cfg = o.caps;
      cfg.workers = o.workers;
      const auto rep = verify_sandwich(n, k, f, cfg);
      nlohmann::ordered_json j;
      j["n"] = n;
      j["k"] = k;
      j["forbidden"] = graph6_encode(f);
      j["ex_gen"] = detail::opt_json(rep.generalized);
      j["ex_berge"] = detail::opt_json(rep.berge);
      j["ex_col"] = detail::opt_json(rep.colored);
      j["ex"] = detail::opt_json(rep.edges);
      auto flag = [](const std::optional<Count>& a, const std::optional<Count>& b) {
        return a && b ? nlohmann::ordered_json(*a <= *b) : nlohmann::ordered_json(nullptr);
      };
      std::optional<Count> top;
      if (rep.generalized && rep.edges) top = *rep.generalized + *rep.edges;
      j["gen_le_berge"] = flag(rep.generalized, rep.berge);
      j["berge_le_col"] = flag(rep.berge, rep.colored);
      j["col_le_gen_plus_ex"] = flag(rep.colored, top);
      j["berge_equals_gen"] = rep.conjecture_equality() ? nlohmann::ordered_json(*rep.conjecture_equality())
                                                        : nlohmann::ordered_json(nullptr);
      j["berge_min_degree"] = rep.berge_min_degree ? nlohmann::ordered_json(*rep.berge_min_degree) : nlohmann::ordered_json(nullptr);
      j["refused"] = rep.refused;
      detail::emit(out, fmt("json"), j);
      return rep.complete() ? 0 : 2;
    }
    if (symmetrize->parsed()) {
      const Graph f = parse_forbidden(fspec);
      const auto st = run_symmetrization(n, k, f, seed, budget, o.workers);
      for (const auto& w : st.warnings) err << "warning: " << w << '\n';
      if (!history_csv.empty()) {
        std::ofstream h(history_csv);
        if (!h) throw InvalidInput("cannot write " + history_csv);
        h << "step,g\n";
        for (const auto& [step, g] : st.g_history) h << step << ',' << g << '\n';
      }
      const std::string f6 = fmt("json");
      if (f6 == "csv") {
        out << "step,g\n";
        for (const auto& [step, g] : st.g_history) out << step << ',' << g << '\n';
        return 0;
      }
      nlohmann::ordered_json j;
      j["n"] = n;
      j["k"] = k;
      j["seed"] = seed;
      j["budget"] = budget;
      j["g"] = st.g();
      j["moves_applied"] = st.moves_applied;
      j["graph6"] = graph6_encode(st.current.graph());
      j["red_edges"] = edges_json(st.current.red());
      if (f6 == "json") {
        auto hist = nlohmann::ordered_json::array();
        for (const auto& [step, g] : st.g_history) hist.push_back({step, g});
        j["g_history"] = hist;
        out << j.dump() << '\n';
      } else {
        j["red_edges"] = j["red_edges"].dump();
        detail::emit(out, "human", j);
      }
      return 0;
    }
    if (ineq->parsed()) {
      std::vector<EquReport> rows;
      std::optional<int> threshold;
      if (r_opt->count() > 0) {
        rows.push_back(eq_check(k, r));
      } else {
        const auto scan = scan_equ(k, r_max > 0 ? r_max : k);
        rows = scan.rows;
        threshold = scan.threshold;
      }
      const std::string f6 = fmt("csv");
      if (f6 == "json") {
        for (const auto& e : rows) {
          nlohmann::ordered_json j;
          j["k"] = e.k;
          j["r"] = e.r;
          j["lhs"] = to_string(e.lhs);
          j["rhs"] = to_string(e.rhs);
          j["contradiction"] = e.contradiction;
          out << j.dump() << '\n';
        }
      } else {
        std::vector<std::vector<std::string>> table;
        for (const auto& e : rows)
          table.push_back({std::to_string(e.k), std::to_string(e.r), to_string(e.lhs), to_string(e.rhs),
                           e.contradiction ? "true" : "false"});
        const std::vector<std::string> header{"k", "r", "lhs", "rhs", "contradiction"};
        if (f6 == "csv") {
          detail::print_csv(out, header, table);
        } else {
          detail::print_table(out, header, table);
          if (threshold) out << "contradiction for every scanned r >= " << *threshold << '\n';
        }
      }
      return 0;
    }
    if (report->parsed()) {
      const Graph f = parse_forbidden(fspec);
      SearchConfig cfg = o.caps;
      cfg.workers = o.workers;
      const auto rep = conjecture_report(n_max, k, f, cfg);
      const std::string f6 = fmt("human");
      nlohmann::ordered_json facts;
      facts["chi"] = rep.facts.chi;
      facts["sigma"] = rep.facts.sigma ? nlohmann::ordered_json(*rep.facts.sigma) : nlohmann::ordered_json(nullptr);
      facts["chi_greater_than_k"] = rep.facts.non_degenerate;
      facts["critical_vertex"] = rep.facts.critical_vertex;
      facts["critical_edge"] = rep.facts.critical_edge;
      facts["degenerate"] = rep.degenerate();
      facts["applicable"] = rep.facts.applicable;
      const std::vector<std::string> header{"n", "ex_gen", "ex_berge", "ex_col", "ex", "berge=gen", "col=gen", "berge_min_deg", "prediction", "status"};
      std::vector<std::vector<std::string>> table;
      auto rows_json = nlohmann::ordered_json::array();
      for (const auto& row : rep.rows) {
        const auto& s = row.sandwich;
        auto eq = [](const std::optional<Count>& a, const std::optional<Count>& b) -> std::string {
          if (!a || !b) return "";
          return *a == *b ? "yes" : "no";
        };
        table.push_back({std::to_string(row.n), detail::opt(s.generalized), detail::opt(s.berge), detail::opt(s.colored),
                         detail::opt(s.edges), eq(s.berge, s.generalized), eq(s.colored, s.generalized),
                         s.berge_min_degree ? std::to_string(*s.berge_min_degree) : "",
                         detail::opt(row.component_prediction), row.incomplete() ? "incomplete" : "ok"});
        nlohmann::ordered_json rj;
        for (std::size_t c = 0; c < header.size(); ++c) rj[header[c]] = table.back()[c];
        rows_json.push_back(rj);
      }
      if (f6 == "json") {
        nlohmann::ordered_json j;
        j["k"] = k;
        j["forbidden"] = graph6_encode(f);
        j["facts"] = facts;
        j["rows"] = rows_json;
        out << j.dump() << '\n';
      } else if (f6 == "csv") {
        detail::print_csv(out, header, table);
      } else {
        out << "F = " << graph6_encode(f) << ", k = " << k << ", chi(F) = " << rep.facts.chi
            << ", sigma(F) = " << (rep.facts.sigma ? std::to_string(*rep.facts.sigma) : "n/a")
            << ", critical vertex: " << (rep.facts.critical_vertex ? "yes" : "no")
            << ", critical edge: " << (rep.facts.critical_edge ? "yes" : "no") << '\n';
        if (rep.degenerate()) out << "degenerate regime: chi(F) <= k, the equality hypothesis fails\n";
        for (const auto& a : rep.facts.applicable) out << "applies for large n: " << a << '\n';
        detail::print_table(out, header, table);
        out << "Values are exact at each listed n; nothing here is a statement about large n.\n";
      }
      return 0;
    }
  } catch (const CapExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return 3;
  } catch (const CountOverflow& e) {
    err << "refused: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return 1;
}

}  // namespace berge_turan
