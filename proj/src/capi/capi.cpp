#include "copsearch.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "core/canon.hpp"
#include "core/catalog.hpp"
#include "core/generate.hpp"
#include "core/graph.hpp"
#include "core/lemmas.hpp"
#include "core/patterns.hpp"
#include "core/pipeline.hpp"
#include "core/solver.hpp"

struct cs_graph {
  cops::Graph g;
};

struct cs_graph_list {
  std::vector<cops::Graph> graphs;
};

namespace {

thread_local std::string t_last_error;

template <typename F>
cs_status guarded(F&& body) {
  try {
    t_last_error.clear();
    return body();
  } catch (const cops::ParseError& e) {
    t_last_error = e.what();
    return CS_ERR_PARSE;
  } catch (const cops::BudgetError& e) {
    t_last_error = e.what();
    return CS_ERR_BUDGET;
  } catch (const cops::IoError& e) {
    t_last_error = e.what();
    return CS_ERR_IO;
  } catch (const std::filesystem::filesystem_error& e) {
    t_last_error = e.what();
    return CS_ERR_IO;
  } catch (const std::invalid_argument& e) {
    t_last_error = e.what();
    return CS_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return CS_ERR_INTERNAL;
  }
}

cs_status bad_argument(const char* what) {
  t_last_error = what;
  return CS_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

cs_status out_string(const std::string& s, char** out) {
  *out = dup_string(s);
  if (!*out) {
    t_last_error = "out of memory";
    return CS_ERR_INTERNAL;
  }
  return CS_OK;
}

}  // namespace

extern "C" {

const char* cs_last_error(void) { return t_last_error.c_str(); }

void cs_string_free(char* s) { std::free(s); }
void cs_ints_free(int* p) { std::free(p); }

cs_status cs_graph_from_g6(const char* line, cs_graph** out) {
  if (!line || !out) return bad_argument("null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new cs_graph{cops::Graph::decode_graph6(line)};
    return CS_OK;
  });
}

cs_status cs_graph_from_edges(int n, const int* endpoints, size_t edge_count, cs_graph** out) {
  if (!out || (edge_count > 0 && !endpoints)) return bad_argument("null argument");
  *out = nullptr;
  return guarded([&] {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i)
      edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    *out = new cs_graph{cops::Graph::from_edges(n, edges)};
    return CS_OK;
  });
}

void cs_graph_free(cs_graph* g) { delete g; }

int cs_graph_order(const cs_graph* g) { return g ? g->g.order() : 0; }
int cs_graph_edge_count(const cs_graph* g) { return g ? g->g.edge_count() : 0; }

int cs_graph_has_edge(const cs_graph* g, int u, int v) {
  if (!g) return 0;
  int n = g->g.order();
  if (u < 0 || v < 0 || u >= n || v >= n || u == v) return 0;
  return g->g.has_edge(u, v) ? 1 : 0;
}

int cs_graph_connected(const cs_graph* g) { return g && g->g.is_connected() ? 1 : 0; }

cs_status cs_graph_g6(const cs_graph* g, char** out) {
  if (!g || !out) return bad_argument("null argument");
  *out = nullptr;
  return guarded([&] { return out_string(g->g.graph6(), out); });
}

cs_status cs_graph_canonical_g6(const cs_graph* g, char** out) {
  if (!g || !out) return bad_argument("null argument");
  *out = nullptr;
  return guarded([&] { return out_string(cops::canonical_representative(g->g).graph6(), out); });
}

int cs_isomorphic(const cs_graph* a, const cs_graph* b) {
  if (!a || !b) return 0;
  return cops::are_isomorphic(a->g, b->g) ? 1 : 0;
}

cs_status cs_independence_number(const cs_graph* g, int* out) {
  if (!g || !out) return bad_argument("null argument");
  return guarded([&] {
    *out = cops::independence_number(g->g);
    return CS_OK;
  });
}

cs_status cs_domination_number(const cs_graph* g, int* out) {
  if (!g || !out) return bad_argument("null argument");
  return guarded([&] {
    *out = cops::domination_number(g->g);
    return CS_OK;
  });
}

cs_status cs_cop_number(const cs_graph* g, int* out) {
  if (!g || !out) return bad_argument("null argument");
  return guarded([&] {
    *out = cops::cop_number(g->g);
    return CS_OK;
  });
}

cs_status cs_cop_wins(const cs_graph* g, int k, int* wins, int** placement,
                      size_t* placement_len) {
  if (!g || !wins) return bad_argument("null argument");
  return guarded([&] {
    cops::CopVerdict v = cops::cop_wins(g->g, k);
    *wins = v.cops_win ? 1 : 0;
    if (placement && placement_len) {
      *placement = nullptr;
      *placement_len = 0;
      if (v.cops_win && v.certificate) {
        int* p = static_cast<int*>(std::malloc(sizeof(int) * v.certificate->size()));
        if (!p) {
          t_last_error = "out of memory";
          return CS_ERR_INTERNAL;
        }
        for (size_t i = 0; i < v.certificate->size(); ++i) p[i] = (*v.certificate)[i];
        *placement = p;
        *placement_len = v.certificate->size();
      }
    }
    return CS_OK;
  });
}

cs_status cs_dismantlable(const cs_graph* g, int* out) {
  if (!g || !out) return bad_argument("null argument");
  return guarded([&] {
    *out = cops::is_dismantlable(g->g) ? 1 : 0;
    return CS_OK;
  });
}

size_t cs_catalog_count(void) { return cops::catalog().size(); }

const char* cs_catalog_name(size_t index) {
  const auto& entries = cops::catalog();
  return index < entries.size() ? entries[index].name.c_str() : nullptr;
}

const char* cs_catalog_note(size_t index) {
  const auto& entries = cops::catalog();
  return index < entries.size() ? entries[index].note.c_str() : nullptr;
}

cs_status cs_catalog_graph(const char* name, cs_graph** out) {
  if (!name || !out) return bad_argument("null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new cs_graph{cops::catalog_graph(name)};
    return CS_OK;
  });
}

cs_status cs_generate(const cs_generate_options* opts, cs_graph_list** out) {
  if (!opts || !out) return bad_argument("null argument");
  *out = nullptr;
  return guarded([&] {
    std::vector<cops::PrunePredicate> prunes;
    if (opts->max_degree >= 0)
      prunes.push_back({"max-degree", [cap = opts->max_degree](const cops::Graph& g) {
                          for (int v = 0; v < g.order(); ++v)
                            if (g.degree(v) > cap) return false;
                          return true;
                        },
                        true});
    if (opts->max_edges >= 0)
      prunes.push_back({"edge-cap", [cap = opts->max_edges](const cops::Graph& g) {
                          return g.edge_count() <= cap;
                        },
                        true});
    if (opts->forbid_k1 >= 2)
      prunes.push_back({"independence-cap", [k = opts->forbid_k1](const cops::Graph& g) {
                          return cops::is_kk1_free(g, k);
                        },
                        true});
    if (opts->deg5_remainders)
      prunes.push_back({"degree-5-remainders",
                        [](const cops::Graph& g) { return cops::check_degree5_remainders(g).holds; },
                        false});
    int workers = opts->workers > 0 ? opts->workers : cops::default_workers();
    *out = new cs_graph_list{cops::generate(opts->n, prunes, workers)};
    return CS_OK;
  });
}

size_t cs_graph_list_size(const cs_graph_list* list) { return list ? list->graphs.size() : 0; }

cs_status cs_graph_list_g6(const cs_graph_list* list, size_t index, char** out) {
  if (!list || !out) return bad_argument("null argument");
  *out = nullptr;
  if (index >= list->graphs.size()) return bad_argument("index out of range");
  return guarded([&] { return out_string(list->graphs[index].graph6(), out); });
}

cs_status cs_graph_list_get(const cs_graph_list* list, size_t index, cs_graph** out) {
  if (!list || !out) return bad_argument("null argument");
  *out = nullptr;
  if (index >= list->graphs.size()) return bad_argument("index out of range");
  return guarded([&] {
    *out = new cs_graph{list->graphs[index]};
    return CS_OK;
  });
}

void cs_graph_list_free(cs_graph_list* list) { delete list; }

cs_status cs_verify_lemma(const char* target, char** json_out) {
  if (!target || !json_out) return bad_argument("null argument");
  *json_out = nullptr;
  return guarded([&] {
    std::string t(target);
    std::vector<cops::ConditionReport> reports;
    if (t == "3k1")
      reports = cops::verify_lemma_3k1();
    else if (t == "classify6")
      reports = cops::verify_six_vertex_classifications();
    else
      return bad_argument("unknown target; expected 3k1 or classify6");
    return out_string(cops::reports_to_json(reports), json_out);
  });
}

cs_status cs_pipeline_run(const cs_pipeline_options* opts, char** report_json_out) {
  if (!opts || !opts->out_dir) return bad_argument("null argument");
  if (report_json_out) *report_json_out = nullptr;
  return guarded([&] {
    cops::PipelineConfig cfg;
    cfg.type = cops::pipeline_type_from(opts->type);
    cfg.out_dir = opts->out_dir;
    cfg.workers = opts->workers;
    cfg.raw_counts = opts->raw_counts != 0;
    if (opts->skip_connectedness >= 0) cfg.skip_connectedness = opts->skip_connectedness != 0;
    cops::PipelineReport rep = cops::run_pipeline(cfg);
    if (report_json_out) return out_string(cops::report_to_json(rep), report_json_out);
    return CS_OK;
  });
}

}  // extern "C"
