// Command-line front end: compile CNF formulas into hardness instances,
// verify (strong) rainbow connectivity, certify graph classes, and run the
// satisfiability round-trip experiment.
//
// Exit codes: 0 = property holds / yes, 1 = property fails / no,
//             2 = error or guard refusal.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rainbow/cnf.hpp"
#include "rainbow/graph_algorithms.hpp"
#include "rainbow/graph_io.hpp"
#include "rainbow/recognize.hpp"
#include "rainbow/reduce.hpp"
#include "rainbow/verify.hpp"

using nlohmann::ordered_json;
using namespace rainbow;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ordered_json input_entry(const std::string& path, const std::string& bytes) {
  ordered_json entry;
  entry["path"] = path;
  entry["digest"] = fnv1a_hex(bytes);
  return entry;
}

ordered_json witness_json(const EdgeColoredGraph& g, const PathWitness& w) {
  ordered_json out;
  ordered_json vs = ordered_json::array();
  for (Vertex v : w.vertices) vs.push_back(g.vertex_name(v));
  ordered_json cs = ordered_json::array();
  for (Color c : w.colors) cs.push_back(g.color_name(c));
  out["vertices"] = vs;
  out["colors"] = cs;
  return out;
}

ordered_json verdict_json(const EdgeColoredGraph& g, const Verdict& v) {
  ordered_json out;
  out["yes"] = v.yes;
  if (v.failing_pair)
    out["failing_pair"] = {g.vertex_name(v.failing_pair->first),
                           g.vertex_name(v.failing_pair->second)};
  else
    out["failing_pair"] = nullptr;
  out["witness"] = v.witness ? witness_json(g, *v.witness) : ordered_json(nullptr);
  out["algorithm"] = v.algorithm;
  out["stats"] = {{"pairs_checked", v.stats.pairs_checked},
                  {"states_explored", v.stats.states_explored}};
  return out;
}

void emit(const ordered_json& report) { std::cout << report.dump(2) << "\n"; }

// ---- reduce ----

int cmd_reduce(const std::string& cnf_path, const std::string& tag, int k,
               const std::string& out_path, const std::string& dot_path) {
  Timer timer;
  auto bytes = read_file(cnf_path);
  auto formula = parse_dimacs(bytes);
  auto reduction = build_construction(tag, formula, k);
  auto doc = reduction_document(reduction);
  write_file(out_path, doc.dump(2) + "\n");
  if (!dot_path.empty()) write_file(dot_path, export_dot(reduction.graph));

  ordered_json report;
  report["command"] = "reduce";
  report["inputs"] = {{"cnf", input_entry(cnf_path, bytes)}};
  report["construction"] = tag;
  if (tag == "kreg") report["k"] = k;
  report["vertices"] = reduction.graph.vertex_count();
  report["edges"] = reduction.graph.edge_count();
  report["colors"] = reduction.graph.color_count();
  report["source"] = reduction.graph.vertex_name(reduction.source);
  report["sink"] = reduction.graph.vertex_name(reduction.sink);
  report["out"] = out_path;
  if (!dot_path.empty()) report["dot"] = dot_path;
  report["timings_ms"] = {{"total", timer.ms()}};
  emit(report);
  std::cerr << "reduce: " << tag << " instance with " << reduction.graph.vertex_count()
            << " vertices, " << reduction.graph.edge_count() << " edges -> " << out_path << "\n";
  return 0;
}

// ---- verify ----

int cmd_verify(const std::string& graph_path, const std::string& mode, const std::string& algo,
               const std::vector<std::string>& pair, std::uint64_t kmax,
               std::optional<std::uint64_t> cap, int color_guard) {
  Timer timer;
  auto bytes = read_file(graph_path);
  auto doc = load_graph_text(bytes);
  const EdgeColoredGraph& g = doc.graph;

  ordered_json report;
  report["command"] = "verify";
  report["inputs"] = {{"graph", input_entry(graph_path, bytes)}};
  report["mode"] = mode;
  report["algo"] = algo;

  if (mode == "rc" && algo != "fpt" && algo != "brute")
    throw ParseError("algo '" + algo + "' is not valid for mode rc (use fpt|brute)");
  if (mode == "src" && algo != "fpt" && algo != "enum" && algo != "geodetic" && algo != "kgeo")
    throw ParseError("algo '" + algo + "' is not valid for mode src (use fpt|enum|geodetic|kgeo)");

  bool yes = false;
  if (!pair.empty()) {
    Vertex u = g.vertex(pair[0]);
    Vertex v = g.vertex(pair[1]);
    VerifyStats stats;
    std::optional<PathWitness> witness;
    if (mode == "rc")
      witness = rainbow_path_between(g, u, v, &stats);
    else
      witness = rainbow_shortest_path_between(g, u, v, &stats);
    yes = witness.has_value();
    report["pair"] = {pair[0], pair[1]};
    report["yes"] = yes;
    report["witness"] = witness ? witness_json(g, *witness) : ordered_json(nullptr);
    report["stats"] = {{"states_explored", stats.states_explored}};
  } else {
    Verdict verdict;
    if (mode == "rc") {
      verdict = rc_verify(g, algo == "fpt" ? RcAlgo::Fpt : RcAlgo::Brute, color_guard);
    } else if (algo == "enum") {
      verdict = src_verify_enumerate(g, cap);
    } else if (algo == "geodetic") {
      verdict = src_verify_geodetic(g);
    } else if (algo == "kgeo") {
      verdict = src_verify_kgeodetic(g, kmax);
    } else {
      verdict = src_verify_fpt(g, color_guard);
    }
    yes = verdict.yes;
    report["verdict"] = verdict_json(g, verdict);
  }
  report["timings_ms"] = {{"total", timer.ms()}};
  emit(report);
  std::cerr << "verify: " << mode << "/" << algo << " -> " << (yes ? "yes" : "no") << "\n";
  return yes ? 0 : 1;
}

// ---- recognize ----

ordered_json names_json(const EdgeColoredGraph& g, const std::vector<Vertex>& vs) {
  ordered_json arr = ordered_json::array();
  for (Vertex v : vs) arr.push_back(g.vertex_name(v));
  return arr;
}

std::pair<ordered_json, bool> recognize_class(const EdgeColoredGraph& g, const std::string& cls) {
  ordered_json entry;
  if (cls == "bipartite") {
    auto r = is_bipartite(g);
    entry["holds"] = r.bipartite;
    if (r.bipartite) {
      ordered_json side = ordered_json::array();
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (r.side[static_cast<size_t>(v)] == 0) side.push_back(g.vertex_name(v));
      entry["certificate"] = {{"one_side", side}};
    } else {
      entry["certificate"] = {{"odd_cycle", names_json(g, r.odd_cycle)}};
    }
    return {entry, r.bipartite};
  }
  if (cls == "chordal") {
    auto r = is_chordal(g);
    entry["holds"] = r.chordal;
    entry["certificate"] =
        r.chordal ? ordered_json{{"elimination_order", names_json(g, r.elimination_order)}}
                  : ordered_json{{"hole", names_json(g, r.hole)}};
    return {entry, r.chordal};
  }
  if (cls == "interval") {
    auto r = is_interval(g);
    bool holds = r.verdict == ScaledVerdict::Yes;
    entry["holds"] = r.verdict == ScaledVerdict::UnknownAtScale ? ordered_json("unknown-at-scale")
                                                                : ordered_json(holds);
    if (holds) {
      ordered_json cliques = ordered_json::array();
      for (const auto& clique : r.clique_path) cliques.push_back(names_json(g, clique));
      entry["certificate"] = {{"clique_path", cliques}};
    } else if (!r.hole.empty()) {
      entry["certificate"] = {{"hole", names_json(g, r.hole)}};
    }
    return {entry, holds};
  }
  if (cls == "block") {
    auto r = is_block_graph(g);
    entry["holds"] = r.block_graph;
    if (!r.block_graph)
      entry["certificate"] = {{"non_clique_block", names_json(g, r.offending_block)}};
    return {entry, r.block_graph};
  }
  if (cls == "claw-free") {
    auto r = is_claw_free(g);
    entry["holds"] = r.claw_free;
    if (!r.claw_free)
      entry["certificate"] = {{"claw", names_json(g, {r.claw[0], r.claw[1], r.claw[2], r.claw[3]})}};
    return {entry, r.claw_free};
  }
  if (cls == "outerplanar") {
    auto r = is_outerplanar(g);
    bool holds = r.verdict == ScaledVerdict::Yes;
    entry["holds"] = r.verdict == ScaledVerdict::UnknownAtScale ? ordered_json("unknown-at-scale")
                                                                : ordered_json(holds);
    if (!holds && !r.reason.empty())
      entry["certificate"] = {{"reason", r.reason}, {"vertices", names_json(g, r.forbidden)}};
    return {entry, holds};
  }
  if (cls == "geodetic") {
    auto value = geodecity(g);
    entry["holds"] = value == 1;
    entry["certificate"] = {{"geodecity", value}};
    return {entry, value == 1};
  }
  bool param_regular = cls.size() > 8 && cls.substr(cls.size() - 8) == "-regular" &&
                       !cls.substr(0, cls.size() - 8).empty() &&
                       cls.find_first_not_of("0123456789") == cls.size() - 8;
  if (cls == "regular" || param_regular) {
    auto r = regularity(g);
    bool holds = r.regular;
    if (cls != "regular") {
      int want = std::stoi(cls.substr(0, cls.size() - 8));
      holds = r.regular && r.degree == want;
    }
    entry["holds"] = holds;
    if (r.regular)
      entry["certificate"] = {{"degree", r.degree}};
    else
      entry["certificate"] = {{"majority_degree", r.degree},
                              {"deviant", g.vertex_name(r.deviant)},
                              {"deviant_degree", r.deviant_degree}};
    return {entry, holds};
  }
  throw ParseError("unknown class '" + cls + "'");
}

int cmd_recognize(const std::string& graph_path, const std::string& classes) {
  Timer timer;
  auto bytes = read_file(graph_path);
  auto doc = load_graph_text(bytes);

  std::vector<std::string> requested;
  std::stringstream ss(classes);
  std::string item;
  while (std::getline(ss, item, ',')) requested.push_back(item);
  if (requested.empty()) throw ParseError("no classes requested");

  ordered_json report;
  report["command"] = "recognize";
  report["inputs"] = {{"graph", input_entry(graph_path, bytes)}};
  ordered_json results;
  bool all_hold = true;
  for (const auto& cls : requested) {
    auto [entry, holds] = recognize_class(doc.graph, cls);
    results[cls] = entry;
    all_hold = all_hold && holds;
  }
  report["classes"] = results;
  report["all_hold"] = all_hold;
  report["timings_ms"] = {{"total", timer.ms()}};
  emit(report);
  std::cerr << "recognize: " << classes << " -> " << (all_hold ? "all hold" : "not all hold")
            << "\n";
  return all_hold ? 0 : 1;
}

// ---- roundtrip ----

int cmd_roundtrip(const std::string& cnf_path, const std::string& tag, int k, bool strong) {
  Timer timer;
  auto bytes = read_file(cnf_path);
  auto formula = parse_dimacs(bytes);
  bool satisfiable = brute_force_sat(formula).has_value();
  auto reduction = build_construction(tag, formula, k);

  VerifyStats stats;
  bool rainbow =
      rainbow_path_between(reduction.graph, reduction.source, reduction.sink, &stats).has_value();
  bool holds = rainbow == satisfiable;

  ordered_json report;
  report["command"] = "roundtrip";
  report["inputs"] = {{"cnf", input_entry(cnf_path, bytes)}};
  report["construction"] = tag;
  if (tag == "kreg") report["k"] = k;
  report["satisfiable"] = satisfiable;
  report["rainbow_path"] = rainbow;
  report["expected_rainbow_path"] = satisfiable;

  if (strong) {
    auto verdict = src_verify_enumerate(reduction.graph);
    // The clique-block construction never admits rainbow shortest paths end
    // to end; the other constructions mirror satisfiability.
    bool expected_src = tag == "ib" ? false : satisfiable;
    report["strong_rainbow_connected"] = verdict.yes;
    report["expected_strong"] = expected_src;
    holds = holds && verdict.yes == expected_src;
  }
  report["holds"] = holds;
  report["timings_ms"] = {{"total", timer.ms()}};
  emit(report);
  std::cerr << "roundtrip: " << tag << " sat=" << (satisfiable ? "yes" : "no")
            << " rainbow=" << (rainbow ? "yes" : "no") << " -> "
            << (holds ? "equivalence holds" : "MISMATCH") << "\n";
  return holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rainbow connectivity toolkit: instance generation, verification, recognition"};
  app.require_subcommand(1);

  auto* reduce = app.add_subcommand("reduce", "compile a CNF formula into a colored gadget graph");
  std::string cnf_path, out_path, dot_path, construction;
  int k = 0;
  reduce->add_option("--cnf", cnf_path, "DIMACS CNF input")->required();
  reduce->add_option("--construction", construction, "base|io|ib|cubic|kreg")->required();
  reduce->add_option("--k", k, "regularity degree (kreg only, k > 3)");
  reduce->add_option("--out", out_path, "output graph document")->required();
  reduce->add_option("--dot", dot_path, "optional DOT export");

  auto* verify = app.add_subcommand("verify", "decide (strong) rainbow connectivity");
  std::string graph_path, mode, algo;
  std::vector<std::string> pair;
  std::uint64_t kmax = 16;
  std::int64_t cap_value = -1;
  int color_guard = kDefaultColorGuard;
  verify->add_option("--graph", graph_path, "graph document")->required();
  verify->add_option("--mode", mode, "rc|src")->required()->check(CLI::IsMember({"rc", "src"}));
  verify->add_option("--algo", algo, "fpt|brute|enum|geodetic|kgeo")->required();
  verify->add_option("--pair", pair, "check one vertex pair only")->expected(2);
  verify->add_option("--kmax", kmax, "shortest-path bound for kgeo (default 16)");
  verify->add_option("--cap", cap_value, "per-pair enumeration cap for enum (default unlimited)");
  verify->add_option("--color-guard", color_guard, "color-count guard for fpt (default 24)");

  auto* recognize = app.add_subcommand("recognize", "certify graph-class membership");
  std::string rec_graph, classes;
  recognize->add_option("--graph", rec_graph, "graph document")->required();
  recognize
      ->add_option("--classes", classes,
                   "comma list: bipartite,chordal,interval,block,claw-free,outerplanar,"
                   "geodetic,regular,<k>-regular")
      ->required();

  auto* roundtrip =
      app.add_subcommand("roundtrip", "check satisfiability against the rainbow path question");
  std::string rt_cnf, rt_tag;
  int rt_k = 0;
  bool strong = false;
  roundtrip->add_option("--cnf", rt_cnf, "DIMACS CNF input")->required();
  roundtrip->add_option("--construction", rt_tag, "base|io|ib|cubic|kreg")->required();
  roundtrip->add_option("--k", rt_k, "regularity degree (kreg only)");
  roundtrip->add_flag("--strong", strong, "also run the strong verifier");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (reduce->parsed()) {
      if (construction == "kreg" && k <= 3)
        throw ParseError("construction kreg requires --k greater than 3");
      if (construction != "kreg" && reduce->count("--k") > 0)
        throw ParseError("--k applies only to construction kreg");
      return cmd_reduce(cnf_path, construction, k, out_path, dot_path);
    }
    if (verify->parsed()) {
      std::optional<std::uint64_t> cap;
      if (cap_value >= 0) cap = static_cast<std::uint64_t>(cap_value);
      return cmd_verify(graph_path, mode, algo, pair, kmax, cap, color_guard);
    }
    if (recognize->parsed()) return cmd_recognize(rec_graph, classes);
    if (roundtrip->parsed()) {
      if (rt_tag == "kreg" && rt_k <= 3)
        throw ParseError("construction kreg requires --k greater than 3");
      if (rt_tag != "kreg" && roundtrip->count("--k") > 0)
        throw ParseError("--k applies only to construction kreg");
      return cmd_roundtrip(rt_cnf, rt_tag, rt_k, strong);
    }
  } catch (const Refusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
