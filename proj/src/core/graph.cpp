#include "core/graph.hpp"

#include <algorithm>
#include <fstream>

namespace cops {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    g.add_edge(u, v);
  }
  return g;
}

void Graph::add_edge(int u, int v) {
  adj_[u] |= vbit(v);
  adj_[v] |= vbit(u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

DegreeProfile Graph::degree_profile() const {
  DegreeProfile p;
  p.sorted.reserve(n_);
  for (int v = 0; v < n_; ++v) p.sorted.push_back(degree(v));
  std::sort(p.sorted.begin(), p.sorted.end());
  p.min = n_ ? p.sorted.front() : 0;
  p.max = n_ ? p.sorted.back() : 0;
  return p;
}

std::vector<Mask> Graph::components() const {
  std::vector<Mask> comps;
  Mask seen = 0;
  for (int v = 0; v < n_; ++v) {
    if (seen & vbit(v)) continue;
    Mask comp = vbit(v);
    for (;;) {
      Mask grow = comp;
      for (Mask m = comp; m;) {
        int u = lowest_vertex(m);
        m &= m - 1;
        grow |= adj_[u];
      }
      if (grow == comp) break;
      comp = grow;
    }
    comps.push_back(comp);
    seen |= comp;
  }
  return comps;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

Graph Graph::complement() const {
  Graph c(n_);
  for (int v = 0; v < n_; ++v) c.adj_[v] = ~adj_[v] & vertices() & ~vbit(v);
  return c;
}

std::string Graph::graph6() const {
  std::string out;
  out.push_back(static_cast<char>(63 + n_));
  int acc = 0, nbits = 0;
  for (int v = 1; v < n_; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph Graph::decode_graph6(const std::string& line) {
  if (line.empty()) throw ParseError("empty graph6 line");
  int n = static_cast<unsigned char>(line[0]) - 63;
  if (n < 0 || n > kMaxVertices) throw ParseError("graph6 order out of supported range");
  Graph g(n);
  size_t need = (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6;
  if (line.size() != 1 + need) throw ParseError("graph6 length mismatch");
  size_t pos = 1;
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (nbits == 0) {
        int c = static_cast<unsigned char>(line[pos++]) - 63;
        if (c < 0 || c > 63) throw ParseError("graph6 byte out of range");
        acc = c;
        nbits = 6;
      }
      if (acc & (1 << (nbits - 1))) g.add_edge(u, v);
      --nbits;
    }
  }
  if (nbits && (acc & ((1 << nbits) - 1))) throw ParseError("graph6 nonzero padding");
  return g;
}

Graph Graph::with_vertex(Mask nbrs) const {
  if (n_ >= kMaxVertices) throw std::invalid_argument("graph order out of range");
  Graph g(n_ + 1);
  for (int v = 0; v < n_; ++v) g.adj_[v] = adj_[v];
  for (Mask m = nbrs; m;) {
    int u = lowest_vertex(m);
    m &= m - 1;
    g.add_edge(u, n_);
  }
  return g;
}

Graph Graph::relabeled(const std::array<std::uint8_t, kMaxVertices>& perm) const {
  Graph g(n_);
  for (int v = 0; v < n_; ++v) {
    for (Mask m = adj_[v]; m;) {
      int u = lowest_vertex(m);
      m &= m - 1;
      if (u > v) g.add_edge(perm[v], perm[u]);
    }
  }
  return g;
}

Induced induced_subgraph(const Graph& g, Mask keep) {
  Induced r;
  r.old_to_new.fill(-1);
  r.new_to_old.fill(-1);
  int k = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (keep & vbit(v)) {
      r.old_to_new[v] = static_cast<std::int8_t>(k);
      r.new_to_old[k] = static_cast<std::int8_t>(v);
      ++k;
    }
  }
  r.graph = Graph(k);
  for (int i = 0; i < k; ++i) {
    Mask nb = g.neighbors(r.new_to_old[i]) & keep;
    for (Mask m = nb; m;) {
      int u = lowest_vertex(m);
      m &= m - 1;
      if (r.old_to_new[u] > i) r.graph.add_edge(i, r.old_to_new[u]);
    }
  }
  return r;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (int u = 0; u < a.order(); ++u)
    for (int v = u + 1; v < a.order(); ++v)
      if (a.has_edge(u, v)) g.add_edge(u, v);
  int off = a.order();
  for (int u = 0; u < b.order(); ++u)
    for (int v = u + 1; v < b.order(); ++v)
      if (b.has_edge(u, v)) g.add_edge(off + u, off + v);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);      // outer C5
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);            // spokes
  }
  return g;
}

std::vector<std::string> read_graph6_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty() || line[0] == '>') continue;  // tolerate format banners
    lines.push_back(line);
  }
  return lines;
}

}  // namespace cops
