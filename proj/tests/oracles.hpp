#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here is deliberately naive: permutation scans, subset scans, and
// a plain least-fixpoint game solver. Keep orders tiny.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "core/graph.hpp"

namespace oracle {

using cops::Graph;
using cops::Mask;

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool is_independent(const Graph& g, Mask m) {
  for (Mask t = m; t; t &= t - 1) {
    int v = cops::lowest_vertex(t);
    if (g.neighbors(v) & m) return false;
  }
  return true;
}

inline bool is_clique(const Graph& g, Mask m) {
  for (Mask t = m; t; t &= t - 1) {
    int v = cops::lowest_vertex(t);
    Mask rest = m & ~cops::vbit(v);
    if ((g.neighbors(v) & rest) != rest) return false;
  }
  return true;
}

inline int brute_independence(const Graph& g) {
  int best = 0;
  for (Mask m = 0; m < (Mask{1} << g.order()); ++m)
    if (is_independent(g, m)) best = std::max(best, cops::popcount(m));
  return best;
}

inline int brute_domination(const Graph& g) {
  int best = g.order();
  Mask all = g.vertices();
  for (Mask m = 0; m < (Mask{1} << g.order()); ++m) {
    Mask covered = 0;
    for (Mask t = m; t; t &= t - 1) covered |= g.closed_neighbors(cops::lowest_vertex(t));
    if (covered == all) best = std::min(best, cops::popcount(m));
  }
  return best;
}

// not-necessarily-induced containment: try every injection pattern -> g
inline bool brute_contains_rec(const Graph& g, const Graph& p, std::vector<int>& img, Mask used) {
  int i = static_cast<int>(img.size());
  if (i == p.order()) return true;
  for (int w = 0; w < g.order(); ++w) {
    if (used & cops::vbit(w)) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j)
      if (p.has_edge(j, i) && !g.has_edge(img[j], w)) ok = false;
    if (!ok) continue;
    img.push_back(w);
    if (brute_contains_rec(g, p, img, used | cops::vbit(w))) return true;
    img.pop_back();
  }
  return false;
}

inline bool brute_contains(const Graph& g, const Graph& pattern) {
  if (pattern.order() > g.order()) return false;
  std::vector<int> img;
  return brute_contains_rec(g, pattern, img, 0);
}

inline bool brute_two_clique_coverable(const Graph& g) {
  Mask all = g.vertices();
  for (Mask m = 0; m < (Mask{1} << g.order()); ++m)
    if (is_clique(g, m) && is_clique(g, all & ~m)) return true;
  return g.order() == 0;
}

// k-cop game decided by least-fixpoint iteration over explicit win tables,
// one per side. Cops place, the robber places seeing them, cops move first;
// stepping onto the robber (or the robber stepping onto a cop) is capture.
struct BruteCopGame {
  const Graph& g;
  int k;
  std::vector<std::vector<int>> configs;           // sorted k-multisets
  std::map<std::vector<int>, int> config_index;
  std::vector<Mask> occupied;
  std::vector<std::vector<int>> moves;             // config -> reachable configs

  BruteCopGame(const Graph& graph, int cops) : g(graph), k(cops) {
    std::vector<int> cur(k, 0);
    for (;;) {
      configs.push_back(cur);
      int i = k - 1;
      while (i >= 0 && cur[i] == g.order() - 1) --i;
      if (i < 0) break;
      int v = cur[i] + 1;
      for (int j = i; j < k; ++j) cur[j] = v;
    }
    for (std::size_t i = 0; i < configs.size(); ++i) config_index[configs[i]] = static_cast<int>(i);
    occupied.resize(configs.size());
    moves.resize(configs.size());
    for (std::size_t i = 0; i < configs.size(); ++i) {
      Mask occ = 0;
      for (int v : configs[i]) occ |= cops::vbit(v);
      occupied[i] = occ;
      std::set<int> next;
      std::vector<int> pick(k);
      expand(configs[i], 0, pick, next);
      moves[i].assign(next.begin(), next.end());
    }
  }

  void expand(const std::vector<int>& from, int i, std::vector<int>& pick, std::set<int>& out) {
    if (i == k) {
      std::vector<int> sorted = pick;
      std::sort(sorted.begin(), sorted.end());
      out.insert(config_index.at(sorted));
      return;
    }
    for (Mask t = g.closed_neighbors(from[i]); t; t &= t - 1) {
      pick[i] = cops::lowest_vertex(t);
      expand(from, i + 1, pick, out);
    }
  }

  bool cops_win() {
    int n = g.order();
    int c = static_cast<int>(configs.size());
    std::vector<char> wc(static_cast<std::size_t>(c) * n, 0);  // cops to move
    std::vector<char> wr(static_cast<std::size_t>(c) * n, 0);  // robber to move
    bool changed = true;
    while (changed) {
      changed = false;
      for (int ci = 0; ci < c; ++ci)
        for (int r = 0; r < n; ++r) {
          std::size_t s = static_cast<std::size_t>(ci) * n + r;
          if (!wc[s]) {
            for (int m : moves[ci])
              if ((occupied[m] >> r & 1) || wr[static_cast<std::size_t>(m) * n + r]) {
                wc[s] = 1;
                changed = true;
                break;
              }
          }
          if (!wr[s]) {
            bool all = true;
            for (Mask t = g.closed_neighbors(r); t && all; t &= t - 1) {
              int r2 = cops::lowest_vertex(t);
              if (!(occupied[ci] >> r2 & 1) && !wc[static_cast<std::size_t>(ci) * n + r2]) all = false;
            }
            if (all) {
              wr[s] = 1;
              changed = true;
            }
          }
        }
    }
    for (int ci = 0; ci < c; ++ci) {
      bool all = true;
      for (int r = 0; r < n && all; ++r)
        if (!(occupied[ci] >> r & 1) && !wc[static_cast<std::size_t>(ci) * n + r]) all = false;
      if (all) return true;
    }
    return false;
  }
};

inline bool brute_cop_wins(const Graph& g, int k) { return BruteCopGame(g, k).cops_win(); }

inline int brute_cop_number_connected(const Graph& g) {
  for (int k = 1;; ++k)
    if (brute_cop_wins(g, k)) return k;
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<Graph> all_labeled_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  out.reserve(std::size_t{1} << pairs.size());
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (bits >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    out.push_back(g);
  }
  return out;
}

// class count via brute_isomorphic only; degree-sequence buckets keep the
// pairwise scan tolerable
inline int brute_class_count(int n) {
  std::map<std::vector<int>, std::vector<Graph>> reps;
  int count = 0;
  for (const Graph& g : all_labeled_graphs(n)) {
    std::vector<int> key = g.degree_profile().sorted;
    auto& bucket = reps[key];
    bool seen = false;
    for (const Graph& r : bucket)
      if (brute_isomorphic(g, r)) {
        seen = true;
        break;
      }
    if (!seen) {
      bucket.push_back(g);
      ++count;
    }
  }
  return count;
}

}  // namespace oracle
