#include "core/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

#include "core/canon.hpp"
#include "core/catalog.hpp"
#include "core/generate.hpp"
#include "core/lemmas.hpp"
#include "core/patterns.hpp"
#include "core/solver.hpp"

namespace cops {

namespace {

struct TypeSpec {
  int h_order;
  int h_max_deg;
  int h_max_edges;   // -1: unbounded
  bool h_star;       // degree-5 remainder predicate on the base graph
  int anchors;
  bool anchors_adjacent;
  int min_links;     // edges from one anchor into the base graph
  int max_links;
  bool cover_rule;   // every base vertex must see an anchor (non-adjacent anchors only)
  bool conn_default; // connectedness checked by default
};

const TypeSpec& spec_for(PipelineType t) {
  static const TypeSpec a{10, 5, 21, true, 3, false, 6, 6, true, false};
  static const TypeSpec b{11, 5, -1, false, 2, false, 6, 6, false, false};
  static const TypeSpec c{10, 4, -1, false, 3, false, 0, 6, true, false};
  static const TypeSpec d{10, 5, -1, false, 3, true, 4, 4, false, true};
  switch (t) {
    case PipelineType::A: return a;
    case PipelineType::B: return b;
    case PipelineType::C: return c;
    case PipelineType::D: return d;
  }
  throw std::invalid_argument("bad pipeline type");
}

Mask apply_perm(const Perm& p, Mask m) {
  Mask r = 0;
  for (; m; m &= m - 1) r |= vbit(p[lowest_vertex(m)]);
  return r;
}

// full group closure from generators; empty result means "too large, skip the
// deep symmetry pruning" (identity is never stored)
std::vector<Perm> close_group(const std::vector<Perm>& gens, int n, std::size_t cap) {
  Perm id{};
  for (int i = 0; i < kMaxVertices; ++i) id[i] = static_cast<std::uint8_t>(i);
  auto normalize = [&](const Perm& p) {
    Perm q = id;
    for (int i = 0; i < n; ++i) q[i] = p[i];
    return q;
  };
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier)
      for (const Perm& g : gens) {
        Perm q = id;
        for (int i = 0; i < n; ++i) q[i] = g[p[i]];
        q = normalize(q);
        if (seen.insert(q).second) {
          if (seen.size() > cap) return {};
          next.push_back(q);
        }
      }
    frontier = std::move(next);
  }
  std::vector<Perm> out;
  for (const Perm& p : seen)
    if (p != id) out.push_back(p);
  return out;
}

bool has_independent_triple(const Graph& g, Mask within) {
  for (Mask mi = within; mi; mi &= mi - 1) {
    int i = lowest_vertex(mi);
    Mask rest = within & ~g.closed_neighbors(i) & ~(vbit(i) - 1);
    for (Mask mj = rest; mj; mj &= mj - 1) {
      int j = lowest_vertex(mj);
      if (rest & ~g.closed_neighbors(j) & ~vbit(j)) return true;
    }
  }
  return false;
}

bool is_clique_mask(const Graph& g, Mask within) {
  for (Mask m = within; m; m &= m - 1) {
    int v = lowest_vertex(m);
    if ((within & ~g.closed_neighbors(v)) != 0) return false;
  }
  return true;
}

// lean final filter: max degree 6, corner-free, 4K1-free, optional connectivity
bool structural_ok(const Graph& g, bool check_connected) {
  int n = g.order();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > 6) return false;
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      if ((g.neighbors(v) & ~g.closed_neighbors(u)) == 0) return false;
    }
  if (check_connected && !g.is_connected()) return false;
  if (find_independent_set(g, 4)) return false;
  return true;
}

// canonical forms the remainder of a degree-6 vertex may leave after deleting
// the other anchors as well: B6/T6 minus zero, one, or two pairwise
// non-adjacent vertices
std::set<CanonicalForm> remainder_forms(int deleted) {
  std::set<CanonicalForm> out;
  for (const char* name : {"B6", "T6"}) {
    Graph x = catalog_graph(name);
    if (deleted == 0) {
      out.insert(canonical_form(x));
      continue;
    }
    for (int v = 0; v < x.order(); ++v) {
      if (deleted == 1) {
        out.insert(canonical_form(induced_subgraph(x, x.vertices() & ~vbit(v)).graph));
        continue;
      }
      for (int u = v + 1; u < x.order(); ++u) {
        if (x.has_edge(u, v)) continue;
        out.insert(canonical_form(induced_subgraph(x, x.vertices() & ~vbit(v) & ~vbit(u)).graph));
      }
    }
  }
  return out;
}

struct Step2 {
  const Graph& h;
  const TypeSpec& ts;
  bool check_conn;
  bool cover_prune;

  int n = 0;
  Mask all = 0;
  std::vector<Mask> feasible;        // ascending
  std::vector<std::size_t> level1;   // indices of orbit-minimal feasible masks
  std::vector<Perm> group;           // nontrivial elements; empty when unusable
  bool deep_aut = false;
  std::array<int, kMaxVertices> cap{};
  std::vector<Graph> out;

  Step2(const Graph& h_, const TypeSpec& ts_, bool conn, bool cover)
      : h(h_), ts(ts_), check_conn(conn), cover_prune(cover) {
    n = h.order();
    all = h.vertices();
  }

  void prepare_masks() {
    const bool top_deg6 = !ts.anchors_adjacent;  // links alone reach degree 6
    static const std::set<CanonicalForm> rest4 = remainder_forms(2);
    static const std::set<CanonicalForm> rest5 = remainder_forms(1);
    static const std::set<CanonicalForm> rest6 = remainder_forms(0);
    const std::set<CanonicalForm>* want = nullptr;
    if (ts.anchors_adjacent)
      want = &rest6;
    else if (n == 11)
      want = &rest5;
    else
      want = &rest4;
    for (Mask m = 0; m <= all; ++m) {
      if ((m & ~all) != 0) continue;
      int size = popcount(m);
      if (size < ts.min_links || size > ts.max_links) continue;
      Mask rest = all & ~m;
      if (has_independent_triple(h, rest)) continue;
      bool anchor_deg6 = ts.anchors_adjacent || (top_deg6 && size == 6);
      if (anchor_deg6 && !want->count(canonical_form(induced_subgraph(h, rest).graph))) continue;
      feasible.push_back(m);
    }
  }

  void prepare_group() {
    CanonResult cr = canonical_analysis(h);
    // orbit-minimal first masks via generator closure over the feasible set
    std::vector<char> visited(std::size_t{1} << n, 0);
    for (std::size_t i = 0; i < feasible.size(); ++i) {
      if (visited[feasible[i]]) continue;
      level1.push_back(i);
      std::vector<Mask> stack{feasible[i]};
      visited[feasible[i]] = 1;
      while (!stack.empty()) {
        Mask m = stack.back();
        stack.pop_back();
        for (const Perm& g : cr.aut_generators) {
          Mask im = apply_perm(g, m);
          if (!visited[im]) {
            visited[im] = 1;
            stack.push_back(im);
          }
        }
      }
    }
    if (!cr.aut_generators.empty()) {
      group = close_group(cr.aut_generators, n, 100000);
      deep_aut = !group.empty() && group.size() <= 5000 && ts.anchors > 1;
    }
  }

  // reject prefixes that a base-graph automorphism maps to a smaller sorted
  // tuple; any completion of such a prefix loses to the image's completion
  bool prefix_minimal(int level, const std::array<Mask, 3>& chosen) {
    std::array<Mask, 3> img{};
    for (const Perm& p : group) {
      for (int i = 0; i < level; ++i) img[i] = apply_perm(p, chosen[i]);
      std::sort(img.begin(), img.begin() + level);
      for (int i = 0; i < level; ++i) {
        if (img[i] < chosen[i]) return false;
        if (img[i] > chosen[i]) break;
      }
    }
    return true;
  }

  void run() {
    prepare_masks();
    if (feasible.empty()) return;
    prepare_group();
    std::array<Mask, 3> chosen{};
    std::array<int, kMaxVertices> hits{};
    Mask at_cap = 0;
    for (int v = 0; v < n; ++v) {
      cap[v] = 6 - h.degree(v);
      if (cap[v] == 0) at_cap |= vbit(v);
    }
    for (std::size_t idx : level1) {
      if (feasible[idx] & at_cap) continue;
      chosen[0] = feasible[idx];
      descend(1, idx, chosen, hits, at_cap);
    }
  }

  void descend(int level, std::size_t from, std::array<Mask, 3>& chosen,
               std::array<int, kMaxVertices>& hits, Mask at_cap) {
    Mask m_prev = chosen[level - 1];
    for (Mask mm = m_prev; mm; mm &= mm - 1) {
      int v = lowest_vertex(mm);
      if (++hits[v] == cap[v]) at_cap |= vbit(v);
    }
    if (level == ts.anchors) {
      finalize(chosen);
    } else {
      for (std::size_t i = from; i < feasible.size(); ++i) {
        Mask m = feasible[i];
        if (m & at_cap) continue;
        if (!ts.anchors_adjacent) {
          bool ok = true;
          for (int p = 0; p < level && ok; ++p)
            ok = is_clique_mask(h, all & ~(chosen[p] | m));
          if (!ok) continue;
        }
        if (cover_prune && ts.cover_rule && level + 1 == ts.anchors) {
          Mask covered = m;
          for (int p = 0; p < level; ++p) covered |= chosen[p];
          if (covered != all) continue;
        }
        chosen[level] = m;
        if (deep_aut && !prefix_minimal(level + 1, chosen)) continue;
        descend(level + 1, i, chosen, hits, at_cap);
      }
    }
    for (Mask mm = m_prev; mm; mm &= mm - 1) --hits[lowest_vertex(mm)];
  }

  void finalize(const std::array<Mask, 3>& chosen) {
    Graph g = h;
    for (int i = 0; i < ts.anchors; ++i) {
      Mask links = chosen[i];
      if (ts.anchors_adjacent)
        for (int j = 0; j < i; ++j) links |= vbit(n + j);
      g = g.with_vertex(links);
    }
    if (ts.anchors == 2) {
      // every degree-6 vertex must lie in a closed anchor neighborhood
      Mask covered = g.closed_neighbors(n) | g.closed_neighbors(n + 1);
      for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 6 && !(covered & vbit(v))) return;
    }
    if (!structural_ok(g, check_conn)) return;
    if (!check_degree6_remainders(g).holds) return;
    out.push_back(std::move(g));
  }
};

long long ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& l : lines) out << l << '\n';
}

}  // namespace

PipelineType pipeline_type_from(char c) {
  switch (c) {
    case 'A': case 'a': return PipelineType::A;
    case 'B': case 'b': return PipelineType::B;
    case 'C': case 'c': return PipelineType::C;
    case 'D': case 'd': return PipelineType::D;
  }
  throw std::invalid_argument("pipeline type must be one of A, B, C, D");
}

int default_workers() {
  if (const char* env = std::getenv("COPSEARCH_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

bool default_check_connected(PipelineType type) { return spec_for(type).conn_default; }

std::vector<Graph> run_step1(PipelineType type, int workers) {
  const TypeSpec& ts = spec_for(type);
  std::vector<PrunePredicate> prunes;
  prunes.push_back({"max-degree", [cap = ts.h_max_deg](const Graph& g) {
                      for (int v = 0; v < g.order(); ++v)
                        if (g.degree(v) > cap) return false;
                      return true;
                    },
                    true});
  prunes.push_back({"4k1-free", [](const Graph& g) { return is_kk1_free(g, 4); }, true});
  if (ts.h_max_edges >= 0)
    prunes.push_back(
        {"edge-cap", [cap = ts.h_max_edges](const Graph& g) { return g.edge_count() <= cap; },
         true});
  if (ts.h_star)
    prunes.push_back(
        {"degree-5-remainders", [](const Graph& g) { return check_degree5_remainders(g).holds; },
         false});
  return generate(ts.h_order, prunes, workers);
}

std::vector<Graph> run_step2(PipelineType type, const Graph& h, bool check_connected,
                             bool use_cover_prune) {
  const TypeSpec& ts = spec_for(type);
  if (h.order() != ts.h_order) throw std::invalid_argument("base graph has the wrong order");
  Step2 s(h, ts, check_connected, use_cover_prune);
  s.run();
  return std::move(s.out);
}

std::vector<std::string> run_step3(const std::vector<Graph>& candidates, int workers) {
  std::set<std::string> violations;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    std::set<std::string> local;
    for (std::size_t i; (i = next.fetch_add(1)) < candidates.size();)
      if (cop_number(candidates[i]) > 2) local.insert(canonical_representative(candidates[i]).graph6());
    std::lock_guard<std::mutex> lk(mu);
    violations.merge(local);
  };
  if (workers <= 1 || candidates.size() < 2) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return {violations.begin(), violations.end()};
}

PipelineReport run_pipeline(const PipelineConfig& config) {
  PipelineReport rep;
  rep.type = config.type;
  int workers = config.workers > 0 ? config.workers : default_workers();
  bool check_conn = config.skip_connectedness ? !*config.skip_connectedness
                                              : default_check_connected(config.type);
  std::filesystem::path dir(config.out_dir);
  std::filesystem::create_directories(dir);

  auto t_start = std::chrono::steady_clock::now();
  std::vector<Graph> step1 = run_step1(config.type, workers);
  rep.step1_count = static_cast<long long>(step1.size());
  rep.step1_ms = ms_since(t_start);
  {
    std::vector<std::string> lines;
    lines.reserve(step1.size());
    for (const Graph& g : step1) lines.push_back(g.graph6());
    write_lines(dir / "step1.g6", lines);
  }

  auto t_step2 = std::chrono::steady_clock::now();
  std::set<std::string> dedup;
  std::vector<Graph> raw_pool;
  long long raw_count = 0;
  {
    std::mutex mu;
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      std::set<std::string> local_dedup;
      std::vector<Graph> local_raw;
      long long local_count = 0;
      for (std::size_t i; (i = next.fetch_add(1)) < step1.size();) {
        std::vector<Graph> survivors = run_step2(config.type, step1[i], check_conn);
        local_count += static_cast<long long>(survivors.size());
        for (Graph& g : survivors) {
          local_dedup.insert(canonical_representative(g).graph6());
          if (config.raw_counts) local_raw.push_back(std::move(g));
        }
      }
      std::lock_guard<std::mutex> lk(mu);
      raw_count += local_count;
      dedup.merge(local_dedup);
      raw_pool.insert(raw_pool.end(), std::make_move_iterator(local_raw.begin()),
                      std::make_move_iterator(local_raw.end()));
    };
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
  }
  rep.step2_raw_count = raw_count;
  rep.step2_dedup_count = static_cast<long long>(dedup.size());
  rep.step2_ms = ms_since(t_step2);
  std::vector<std::string> candidate_lines(dedup.begin(), dedup.end());
  write_lines(dir / "candidates.g6", candidate_lines);

  auto t_step3 = std::chrono::steady_clock::now();
  std::vector<Graph> to_solve;
  if (config.raw_counts) {
    to_solve = std::move(raw_pool);
  } else {
    to_solve.reserve(candidate_lines.size());
    for (const auto& line : candidate_lines) to_solve.push_back(Graph::decode_graph6(line));
  }
  rep.violations = run_step3(to_solve, workers);
  rep.step3_ms = ms_since(t_step3);
  rep.total_ms = ms_since(t_start);

  std::ofstream out(dir / "report.json");
  if (!out) throw IoError("cannot write report.json");
  out << report_to_json(rep) << '\n';
  return rep;
}

std::string report_to_json(const PipelineReport& rep) {
  nlohmann::json j{
      {"type", std::string(1, static_cast<char>(rep.type))},
      {"step1_count", rep.step1_count},
      {"step2_raw_count", rep.step2_raw_count},
      {"step2_dedup_count", rep.step2_dedup_count},
      {"violations", rep.violations},
      {"elapsed_ms",
       {{"step1", rep.step1_ms}, {"step2", rep.step2_ms}, {"step3", rep.step3_ms}, {"total", rep.total_ms}}},
  };
  return j.dump(2);
}

}  // namespace cops
