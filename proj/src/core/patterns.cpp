#include "core/patterns.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "core/canon.hpp"
#include "core/catalog.hpp"

namespace cops {

namespace {

// branch and bound over candidate masks: take the lowest candidate or not
bool find_ind(const Graph& g, Mask cand, Mask cur, int want, Mask& out) {
  int have = popcount(cur);
  if (have >= want) {
    out = cur;
    return true;
  }
  if (have + popcount(cand) < want) return false;
  int v = lowest_vertex(cand);
  if (find_ind(g, cand & ~g.closed_neighbors(v), cur | vbit(v), want, out)) return true;
  return find_ind(g, cand & ~vbit(v), cur, want, out);
}

bool find_clique(const Graph& g, Mask cand, Mask cur, int want, Mask& out) {
  int have = popcount(cur);
  if (have >= want) {
    out = cur;
    return true;
  }
  if (have + popcount(cand) < want) return false;
  int v = lowest_vertex(cand);
  if (find_clique(g, cand & g.neighbors(v), cur | vbit(v), want, out)) return true;
  return find_clique(g, cand & ~vbit(v), cur, want, out);
}

bool find_dom(const Graph& g, Mask covered, Mask chosen, int budget, Mask& out) {
  if (covered == g.vertices()) {
    out = chosen;
    return true;
  }
  if (budget == 0) return false;
  int v = lowest_vertex(~covered & g.vertices());
  for (Mask m = g.closed_neighbors(v); m;) {
    int u = lowest_vertex(m);
    m &= m - 1;
    if (find_dom(g, covered | g.closed_neighbors(u), chosen | vbit(u), budget - 1, out)) return true;
  }
  return false;
}

// backtracking injection: pattern edges must map to host edges
bool embed(const Graph& g, const Graph& p, const std::vector<int>& order, size_t at,
           std::array<int, kMaxVertices>& image, Mask used) {
  if (at == order.size()) return true;
  int pv = order[at];
  Mask allowed = g.vertices() & ~used;
  for (size_t j = 0; j < at; ++j) {
    int pu = order[j];
    if (p.has_edge(pu, pv)) allowed &= g.neighbors(image[pu]);
  }
  for (Mask m = allowed; m;) {
    int gv = lowest_vertex(m);
    m &= m - 1;
    if (g.degree(gv) < p.degree(pv)) continue;
    image[pv] = gv;
    if (embed(g, p, order, at + 1, image, used | vbit(gv))) return true;
  }
  return false;
}

}  // namespace

std::optional<Mask> find_independent_set(const Graph& g, int k) {
  if (k <= 0) return Mask{0};
  Mask out = 0;
  if (find_ind(g, g.vertices(), 0, k, out)) return out;
  return std::nullopt;
}

int independence_number(const Graph& g) {
  int a = 0;
  while (find_independent_set(g, a + 1)) ++a;
  return a;
}

bool is_kk1_free(const Graph& g, int k) { return !find_independent_set(g, k).has_value(); }

std::optional<Mask> find_dominating_set(const Graph& g, int k) {
  if (g.order() == 0) throw std::invalid_argument("domination of the empty graph");
  Mask out = 0;
  if (find_dom(g, 0, 0, k, out)) return out;
  return std::nullopt;
}

int domination_number(const Graph& g) {
  for (int k = 1;; ++k)
    if (find_dominating_set(g, k)) return k;
}

AlphaGamma alpha_gamma(const Graph& g) { return {independence_number(g), domination_number(g)}; }

bool has_clique(const Graph& g, Mask within, int k) {
  if (k <= 0) return true;
  Mask out = 0;
  return find_clique(g, within, 0, k, out);
}

bool contains_subgraph(const Graph& g, const Graph& pattern) {
  if (pattern.order() > g.order() || pattern.edge_count() > g.edge_count()) return false;
  // disjoint unions of cliques reduce to nested clique search
  auto comps = pattern.components();
  bool clique_union = true;
  for (Mask c : comps) {
    int sz = popcount(c);
    int edges = 0;
    for (Mask m = c; m;) {
      int v = lowest_vertex(m);
      m &= m - 1;
      edges += popcount(pattern.neighbors(v));
    }
    if (edges != sz * (sz - 1)) clique_union = false;
  }
  if (clique_union && comps.size() <= 2) {
    std::vector<int> sizes;
    for (Mask c : comps) sizes.push_back(popcount(c));
    std::sort(sizes.rbegin(), sizes.rend());
    if (sizes.empty()) return true;
    if (sizes.size() == 1) return has_clique(g, g.vertices(), sizes[0]);
    // enumerate cliques of the first size, then search the rest
    std::vector<Mask> firsts;
    Mask out = 0;
    // collect all cliques of size sizes[0] by scanning subsets via branch and bound restarts
    struct Collector {
      const Graph& g;
      int want;
      std::vector<Mask>& sink;
      void run(Mask cand, Mask cur) {
        if (popcount(cur) == want) {
          sink.push_back(cur);
          return;
        }
        if (popcount(cur) + popcount(cand) < want) return;
        int v = lowest_vertex(cand);
        run(cand & g.neighbors(v), cur | vbit(v));
        run(cand & ~vbit(v), cur);
      }
    };
    Collector c{g, sizes[0], firsts};
    c.run(g.vertices(), 0);
    for (Mask f : firsts)
      if (find_clique(g, g.vertices() & ~f, 0, sizes[1], out)) return true;
    return false;
  }
  std::vector<int> order(pattern.order());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
  std::array<int, kMaxVertices> image{};
  return embed(g, pattern, order, 0, image, 0);
}

bool isomorphic_to(const Graph& g, const std::string& catalog_name) {
  static std::map<std::string, std::pair<int, CanonicalForm>> forms = [] {
    std::map<std::string, std::pair<int, CanonicalForm>> m;
    for (const auto& e : catalog()) {
      Graph pg = Graph::from_edges(e.n, e.edges);
      m.emplace(e.name, std::make_pair(e.n, canonical_form(pg)));
    }
    return m;
  }();
  auto it = forms.find(catalog_name);
  if (it == forms.end()) throw std::invalid_argument("unknown catalog pattern: " + catalog_name);
  if (g.order() != it->second.first) return false;
  return canonical_form(g) == it->second.second;
}

bool two_clique_coverable(const Graph& g) {
  Graph c = g.complement();
  std::array<int, kMaxVertices> color;
  color.fill(-1);
  for (int s = 0; s < c.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (Mask m = c.neighbors(v); m;) {
        int u = lowest_vertex(m);
        m &= m - 1;
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace cops
