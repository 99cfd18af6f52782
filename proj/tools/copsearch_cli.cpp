#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "copsearch.h"

namespace {

[[noreturn]] void die(const std::string& context) {
  std::cerr << "error: " << context;
  const char* msg = cs_last_error();
  if (msg && *msg) std::cerr << ": " << msg;
  std::cerr << "\n";
  std::exit(1);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  cs_string_free(s);
  return out;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) die("cannot open " + path);
    in = &file;
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(*in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '>') continue;
    lines.push_back(line);
  }
  return lines;
}

int cmd_generate(int n, int max_deg, int max_edges, int forbid_k1, const std::string& pred,
                 const std::string& out_path, int workers) {
  cs_generate_options opts{};
  opts.n = n;
  opts.max_degree = max_deg;
  opts.max_edges = max_edges;
  opts.forbid_k1 = forbid_k1;
  opts.deg5_remainders = pred == "deg5-remainders" ? 1 : 0;
  opts.workers = workers;
  cs_graph_list* list = nullptr;
  if (cs_generate(&opts, &list) != CS_OK) die("generate failed");
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (out_path != "-") {
    file.open(out_path);
    if (!file) die("cannot write " + out_path);
    out = &file;
  }
  size_t count = cs_graph_list_size(list);
  for (size_t i = 0; i < count; ++i) {
    char* s = nullptr;
    if (cs_graph_list_g6(list, i, &s) != CS_OK) die("graph6 encoding failed");
    *out << take_string(s) << '\n';
  }
  cs_graph_list_free(list);
  std::cerr << count << " graphs\n";
  return 0;
}

int cmd_copnum(const std::string& in_path) {
  for (const std::string& line : read_lines(in_path)) {
    cs_graph* g = nullptr;
    if (cs_graph_from_g6(line.c_str(), &g) != CS_OK) die("bad graph6 line \"" + line + "\"");
    int c = 0;
    if (cs_cop_number(g, &c) != CS_OK) die("solving \"" + line + "\" failed");
    std::cout << line << ' ' << c;
    if (cs_graph_connected(g)) {
      int wins = 0;
      int* placement = nullptr;
      size_t len = 0;
      if (cs_cop_wins(g, c, &wins, &placement, &len) != CS_OK)
        die("certificate for \"" + line + "\" failed");
      if (wins && len) {
        std::cout << ' ';
        for (size_t i = 0; i < len; ++i) std::cout << (i ? "," : "") << placement[i];
      }
      cs_ints_free(placement);
    }
    std::cout << '\n';
    cs_graph_free(g);
  }
  return 0;
}

int cmd_verify(const std::string& target) {
  char* json = nullptr;
  if (cs_verify_lemma(target.c_str(), &json) != CS_OK) die("verification failed");
  std::string text = take_string(json);
  std::cout << text << '\n';
  for (const auto& report : nlohmann::json::parse(text))
    if (!report.at("holds").get<bool>()) return 1;
  return 0;
}

int cmd_pipeline(const std::string& type, const std::string& out_dir, int workers, bool raw,
                 bool skip_conn) {
  cs_pipeline_options opts{};
  opts.type = type.empty() ? '\0' : type[0];
  opts.out_dir = out_dir.c_str();
  opts.workers = workers;
  opts.raw_counts = raw ? 1 : 0;
  opts.skip_connectedness = skip_conn ? 1 : -1;
  char* json = nullptr;
  if (cs_pipeline_run(&opts, &json) != CS_OK) die("pipeline failed");
  std::string text = take_string(json);
  std::cout << text << '\n';
  return nlohmann::json::parse(text).at("violations").empty() ? 0 : 1;
}

int cmd_catalog(const std::string& wanted) {
  bool found = false;
  size_t count = cs_catalog_count();
  for (size_t i = 0; i < count; ++i) {
    const char* name = cs_catalog_name(i);
    if (!wanted.empty() && wanted != name) continue;
    found = true;
    cs_graph* g = nullptr;
    if (cs_catalog_graph(name, &g) != CS_OK) die("catalog lookup failed");
    char* s = nullptr;
    if (cs_graph_g6(g, &s) != CS_OK) die("graph6 encoding failed");
    std::cout << name << ' ' << take_string(s) << ' ';
    int n = cs_graph_order(g);
    bool first = true;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (cs_graph_has_edge(g, u, v)) {
          std::cout << (first ? "" : ",") << u << '-' << v;
          first = false;
        }
    if (first) std::cout << '-';
    std::cout << "  " << cs_catalog_note(i) << '\n';
    cs_graph_free(g);
  }
  if (!wanted.empty() && !found) die("unknown catalog name \"" + wanted + "\"");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cops-and-robbers computations on graphs of up to 31 vertices"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand(
      "generate", "enumerate isomorphism classes under constraints, one graph6 line each");
  int n = 0;
  gen->add_option("n", n, "number of vertices")->required()->check(CLI::Range(0, 31));
  int max_deg = -1;
  gen->add_option("--max-deg", max_deg, "maximum degree");
  int max_edges = -1;
  gen->add_option("--max-edges", max_edges, "maximum edge count");
  int forbid_k1 = 0;
  gen->add_option("--forbid-k1", forbid_k1, "forbid independent sets of this size");
  std::string pred;
  gen->add_option("--pred", pred,
                  "extra output filter; deg5-remainders keeps 10-vertex graphs whose every "
                  "degree-5 vertex leaves K3+K1, 2K2 or P4 after deleting its closed neighborhood")
      ->check(CLI::IsMember({"deg5-remainders"}));
  std::string gen_out = "-";
  gen->add_option("--out", gen_out, "output file (- for stdout)");
  int gen_workers = 0;
  gen->add_option("--workers", gen_workers,
                  "worker threads (default COPSEARCH_WORKERS, else all cores)");

  auto* cop = app.add_subcommand(
      "copnum", "cop number per graph6 input line: '<graph6> <c> [winning placement]'");
  std::string cop_in = "-";
  cop->add_option("input", cop_in, "graph6 file (- for stdin)");

  auto* ver = app.add_subcommand("verify-lemma",
                                 "exhaustively check a finite structural claim (JSON report)");
  std::string target;
  ver->add_option("target", target, "3k1 or classify6")
      ->required()
      ->check(CLI::IsMember({"3k1", "classify6"}));

  auto* pipe =
      app.add_subcommand("pipeline", "search one candidate family for cop-number violations");
  std::string type;
  pipe->add_option("--type", type, "candidate family: A, B, C or D")->required();
  std::string out_dir;
  pipe->add_option("--out", out_dir, "artifact directory (step1.g6, candidates.g6, report.json)")
      ->required();
  int pipe_workers = 0;
  pipe->add_option("--workers", pipe_workers,
                   "worker threads (default COPSEARCH_WORKERS, else all cores)");
  bool raw = false;
  pipe->add_flag("--raw-counts", raw, "solve every raw attachment, not one per isomorphism class");
  bool skip_conn = false;
  pipe->add_flag("--skip-connectedness", skip_conn, "drop the connectedness requirement");

  auto* cat = app.add_subcommand("catalog",
                                 "list the named small graphs: name, graph6, edges, description");
  std::string cat_name;
  cat->add_option("name", cat_name, "print a single entry");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) return cmd_generate(n, max_deg, max_edges, forbid_k1, pred, gen_out, gen_workers);
  if (cop->parsed()) return cmd_copnum(cop_in);
  if (ver->parsed()) return cmd_verify(target);
  if (pipe->parsed()) return cmd_pipeline(type, out_dir, pipe_workers, raw, skip_conn);
  if (cat->parsed()) return cmd_catalog(cat_name);
  return 0;
}
