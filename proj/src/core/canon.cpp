#include "core/canon.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cops {

namespace {

// Individualization-refinement search for the lexicographically smallest
// upper-triangle bitstring among labelings reachable through equitable
// refinement. Branches are pruned by a node invariant (hashed partition
// shape plus cell-to-cell degrees) and by orbits of the automorphisms
// discovered at equal leaves.
struct Search {
  const Graph& g;
  int n;

  struct Cells {
    std::array<Mask, kMaxVertices> cell;
    int count = 0;
  };

  std::array<std::uint64_t, kMaxVertices + 1> trace{};
  std::array<bool, kMaxVertices + 1> trace_set{};
  bool best_valid = false;
  std::array<std::uint64_t, 8> best_bits{};
  Perm best_lab{};
  std::vector<Perm> gens;
  std::array<int, kMaxVertices> fixed{};
  long long nodes = 0;

  explicit Search(const Graph& graph) : g(graph), n(graph.order()) {}

  void refine(Cells& p) const {
    std::array<Mask, 1024> work;
    int wh = 0, wt = 0;
    for (int i = 0; i < p.count; ++i) work[wt++] = p.cell[i];
    while (wh < wt) {
      Mask splitter = work[wh++];
      for (int ci = 0; ci < p.count; ++ci) {
        Mask x = p.cell[ci];
        if ((x & (x - 1)) == 0) continue;  // singleton
        std::array<Mask, kMaxVertices + 1> bucket{};
        int mind = kMaxVertices, maxd = 0;
        for (Mask m = x; m;) {
          int v = lowest_vertex(m);
          m &= m - 1;
          int d = popcount(g.neighbors(v) & splitter);
          bucket[d] |= vbit(v);
          mind = std::min(mind, d);
          maxd = std::max(maxd, d);
        }
        if (mind == maxd) continue;
        int groups = 0;
        for (int d = mind; d <= maxd; ++d)
          if (bucket[d]) ++groups;
        for (int j = p.count - 1; j > ci; --j) p.cell[j + groups - 1] = p.cell[j];
        p.count += groups - 1;
        int at = ci;
        for (int d = mind; d <= maxd; ++d) {
          if (!bucket[d]) continue;
          p.cell[at++] = bucket[d];
          if (wt == static_cast<int>(work.size())) throw std::runtime_error("refinement worklist overflow");
          work[wt++] = bucket[d];
        }
        ci += groups - 1;
      }
    }
#ifndef NDEBUG
    for (int i = 0; i < p.count; ++i)
      for (int j = 0; j < p.count; ++j) {
        int d0 = -1;
        for (Mask m = p.cell[i]; m;) {
          int v = lowest_vertex(m);
          m &= m - 1;
          int d = popcount(g.neighbors(v) & p.cell[j]);
          assert(d0 < 0 || d == d0);
          d0 = d;
        }
      }
#endif
  }

  std::uint64_t node_invariant(const Cells& p) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(p.count));
    for (int i = 0; i < p.count; ++i) {
      mix(static_cast<std::uint64_t>(popcount(p.cell[i])));
      int v = lowest_vertex(p.cell[i]);  // cells are equitable, any member works
      for (int j = 0; j < p.count; ++j) mix(static_cast<std::uint64_t>(popcount(g.neighbors(v) & p.cell[j])));
    }
    return h;
  }

  std::array<std::uint64_t, 8> pack_bits(const Perm& lab) const {
    Perm at_pos{};
    for (int v = 0; v < n; ++v) at_pos[lab[v]] = static_cast<std::uint8_t>(v);
    std::array<std::uint64_t, 8> bits{};
    int k = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++k)
        if (g.has_edge(at_pos[i], at_pos[j])) bits[k >> 6] |= 1ull << (63 - (k & 63));
    return bits;
  }

  bool orbit_seen(int depth, int v, Mask done) const {
    std::array<std::uint8_t, kMaxVertices> uf;
    for (int i = 0; i < n; ++i) uf[i] = static_cast<std::uint8_t>(i);
    auto find = [&uf](int x) {
      while (uf[x] != x) {
        uf[x] = uf[uf[x]];
        x = uf[x];
      }
      return x;
    };
    for (const Perm& gamma : gens) {
      bool fixes_path = true;
      for (int d = 0; d < depth && fixes_path; ++d) fixes_path = gamma[fixed[d]] == fixed[d];
      if (!fixes_path) continue;
      for (int x = 0; x < n; ++x) {
        int a = find(x), b = find(gamma[x]);
        if (a != b) uf[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
      }
    }
    int rv = find(v);
    for (Mask m = done; m;) {
      int w = lowest_vertex(m);
      m &= m - 1;
      if (find(w) == rv) return true;
    }
    return false;
  }

  void record_leaf(const Cells& p) {
    Perm lab{};
    for (int i = 0; i < p.count; ++i) lab[lowest_vertex(p.cell[i])] = static_cast<std::uint8_t>(i);
    auto bits = pack_bits(lab);
    if (!best_valid) {
      best_bits = bits;
      best_lab = lab;
      best_valid = true;
      return;
    }
    if (bits < best_bits) {
      best_bits = bits;
      best_lab = lab;
      return;
    }
    if (bits != best_bits) return;
    Perm at_pos{};
    for (int v = 0; v < n; ++v) at_pos[lab[v]] = static_cast<std::uint8_t>(v);
    Perm gamma{};
    bool nontrivial = false;
    for (int v = 0; v < n; ++v) {
      gamma[v] = at_pos[best_lab[v]];
      nontrivial |= gamma[v] != v;
    }
    if (!nontrivial) return;
#ifndef NDEBUG
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) assert(g.has_edge(u, v) == g.has_edge(gamma[u], gamma[v]));
#endif
    for (const Perm& known : gens)
      if (std::equal(known.begin(), known.begin() + n, gamma.begin())) return;
    gens.push_back(gamma);
  }

  void dfs(const Cells& parent, int depth) {
    if (++nodes > 4000000) throw std::runtime_error("canonical search budget exceeded");
    Cells p = parent;
    refine(p);
    std::uint64_t inv = node_invariant(p);
    if (!trace_set[depth]) {
      trace[depth] = inv;
      trace_set[depth] = true;
    } else if (inv < trace[depth]) {
      trace[depth] = inv;
      for (int d = depth + 1; d <= n; ++d) trace_set[d] = false;
      best_valid = false;
    } else if (inv > trace[depth]) {
      return;
    }
    if (p.count == n) {
      record_leaf(p);
      return;
    }
    int ti = 0;
    while ((p.cell[ti] & (p.cell[ti] - 1)) == 0) ++ti;
    Mask w = p.cell[ti];
    Mask done = 0;
    for (Mask m = w; m;) {
      int v = lowest_vertex(m);
      m &= m - 1;
      if (done && orbit_seen(depth, v, done)) {
        done |= vbit(v);
        continue;
      }
      Cells child = p;
      for (int j = child.count; j > ti + 1; --j) child.cell[j] = child.cell[j - 1];
      child.cell[ti] = vbit(v);
      child.cell[ti + 1] = w & ~vbit(v);
      ++child.count;
      fixed[depth] = v;
      dfs(child, depth + 1);
      done |= vbit(v);
    }
  }
};

}  // namespace

CanonResult canonical_analysis(const Graph& g) {
  int n = g.order();
  CanonResult r;
  r.form.n = static_cast<std::uint8_t>(n);
  for (int v = 0; v < kMaxVertices; ++v) r.labeling[v] = static_cast<std::uint8_t>(v);
  if (n == 0) return r;
  Search s(g);
  Search::Cells root;
  root.count = 1;
  root.cell[0] = all_vertices(n);
  s.dfs(root, 0);
  r.form.bits = s.best_bits;
  r.labeling = s.best_lab;
  r.aut_generators = std::move(s.gens);
  return r;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_analysis(g).form; }

Graph canonical_representative(const Graph& g) { return g.relabeled(canonical_analysis(g).labeling); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (a.degree_profile().sorted != b.degree_profile().sorted) return false;
  return canonical_form(a) == canonical_form(b);
}

std::array<std::uint8_t, kMaxVertices> vertex_orbits(int n, const std::vector<Perm>& gens) {
  std::array<std::uint8_t, kMaxVertices> uf{};
  for (int i = 0; i < n; ++i) uf[i] = static_cast<std::uint8_t>(i);
  auto find = [&uf](int x) {
    while (uf[x] != x) {
      uf[x] = uf[uf[x]];
      x = uf[x];
    }
    return x;
  };
  for (const Perm& gamma : gens)
    for (int x = 0; x < n; ++x) {
      int a = find(x), b = find(gamma[x]);
      if (a != b) uf[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
    }
  for (int i = 0; i < n; ++i) uf[i] = static_cast<std::uint8_t>(find(i));
  return uf;
}

}  // namespace cops
