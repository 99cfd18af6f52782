#include "core/generate.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <stdexcept>
#include <thread>

#include "core/canon.hpp"

namespace cops {

namespace {

struct Gen {
  int target;
  const std::vector<const PrunePredicate*>& hereditary;
  const std::vector<const PrunePredicate*>& final_only;
  std::vector<std::pair<CanonicalForm, Graph>>& out;
  int stop_at;  // when < target: collect order-stop_at graphs instead of recursing past them
  std::vector<Graph>* frontier = nullptr;

  bool passes(const Graph& g, const std::vector<const PrunePredicate*>& preds) const {
    for (const auto* p : preds)
      if (!p->test(g)) return false;
    return true;
  }

  void emit(const Graph& g, const CanonResult& canon) {
    if (!passes(g, final_only)) return;
#ifndef NDEBUG
    for (int v = 0; v < g.order(); ++v) {
      Graph del = induced_subgraph(g, g.vertices() & ~vbit(v)).graph;
      assert(passes(del, hereditary) && "predicate marked hereditary is not");
    }
#endif
    out.emplace_back(canon.form, g.relabeled(canon.labeling));
  }

  // g passed hereditary prunes; canon is canonical_analysis(g)
  void grow(const Graph& g, const CanonResult& canon) {
    int k = g.order();
    if (k == target) {
      emit(g, canon);
      return;
    }
    if (k == stop_at) {
      frontier->push_back(g);
      return;
    }
    // candidate neighborhoods for the new vertex, up to Aut(g) on masks
    bool trivial_aut = canon.aut_generators.empty();
    for (Mask m = 0; m < (Mask{1} << k); ++m) {
      if (!trivial_aut && !mask_is_orbit_min(m, canon.aut_generators)) continue;
      Graph child = g.with_vertex(m);
      if (!passes(child, hereditary)) continue;
      CanonResult cc = canonical_analysis(child);
      // canonical-deletion test: the new vertex must lie in the orbit of the
      // vertex holding the last canonical label
      int last = 0;
      for (int v = 0; v <= k; ++v)
        if (cc.labeling[v] == k) last = v;
      auto corb = vertex_orbits(k + 1, cc.aut_generators);
      if (corb[k] != corb[last]) continue;
      grow(child, cc);
    }
  }

  static bool mask_is_orbit_min(Mask m, const std::vector<Perm>& gens) {
    // BFS closure of m under the generators; reject if anything smaller shows up
    Mask seen[64];
    int cnt = 0;
    seen[cnt++] = m;
    for (int at = 0; at < cnt; ++at) {
      Mask cur = seen[at];
      for (const Perm& gamma : gens) {
        Mask img = 0;
        for (Mask t = cur; t;) {
          int v = lowest_vertex(t);
          t &= t - 1;
          img |= vbit(gamma[v]);
        }
        if (img < m) return false;
        bool known = false;
        for (int i = 0; i < cnt && !known; ++i) known = seen[i] == img;
        if (!known) {
          if (cnt == 64) return m == smallest_in_closure(m, gens);
          seen[cnt++] = img;
        }
      }
    }
    return true;
  }

  static Mask smallest_in_closure(Mask m, const std::vector<Perm>& gens) {
    // rare fallback for huge orbits: full closure with a sorted vector
    std::vector<Mask> seen{m};
    Mask best = m;
    for (size_t at = 0; at < seen.size(); ++at) {
      for (const Perm& gamma : gens) {
        Mask img = 0;
        for (Mask t = seen[at]; t;) {
          int v = lowest_vertex(t);
          t &= t - 1;
          img |= vbit(gamma[v]);
        }
        best = std::min(best, img);
        if (!std::binary_search(seen.begin(), seen.end(), img)) {
          seen.insert(std::upper_bound(seen.begin(), seen.end(), img), img);
        }
      }
    }
    return best;
  }
};

}  // namespace

std::vector<Graph> generate(int n, const std::vector<PrunePredicate>& prunes, int workers) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("generate: order out of range");
  std::vector<const PrunePredicate*> hered, finals;
  for (const auto& p : prunes) (p.hereditary ? hered : finals).push_back(&p);

  std::vector<std::pair<CanonicalForm, Graph>> collected;
  if (n == 0) {
    Graph empty(0);
    Gen g0{0, hered, finals, collected, -1};
    g0.emit(empty, canonical_analysis(empty));
  } else {
    Graph k1(1);
    if (Gen{n, hered, finals, collected, -1}.passes(k1, hered)) {
      const int split = std::min(9, n - 2);
      if (workers <= 1 || split < 2) {
        Gen g{n, hered, finals, collected, -1};
        g.grow(k1, canonical_analysis(k1));
      } else {
        std::vector<Graph> frontier;
        Gen g{n, hered, finals, collected, split, &frontier};
        g.grow(k1, canonical_analysis(k1));
        std::vector<std::vector<std::pair<CanonicalForm, Graph>>> parts(workers);
        std::atomic<size_t> next{0};
        auto run = [&](int w) {
          for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= frontier.size()) break;
            Gen sub{n, hered, finals, parts[w], -1};
            sub.grow(frontier[i], canonical_analysis(frontier[i]));
          }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
        for (auto& part : parts)
          collected.insert(collected.end(), std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
      }
    }
  }
  std::sort(collected.begin(), collected.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(collected.size());
  for (auto& [form, graph] : collected) out.push_back(std::move(graph));
  return out;
}

}  // namespace cops
