#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cops {

// Vertex subsets are bitmasks over 0..n-1; everything is capped at 31 vertices
// so a subset fits in one word and the graph6 short form applies.
using Mask = std::uint32_t;
using VertexSet = Mask;

constexpr int kMaxVertices = 31;

constexpr Mask vbit(int v) { return Mask{1} << v; }
constexpr Mask all_vertices(int n) { return n == 0 ? 0 : (~Mask{0} >> (32 - n)); }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_vertex(Mask m) { return std::countr_zero(m); }

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeProfile {
  int min = 0;
  int max = 0;
  std::vector<int> sorted;  // ascending
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(check_order(n)) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static Graph decode_graph6(const std::string& line);

  int order() const { return n_; }
  int edge_count() const;
  Mask vertices() const { return all_vertices(n_); }
  bool has_edge(int u, int v) const { return (adj_[u] & vbit(v)) != 0; }
  Mask neighbors(int v) const { return adj_[v]; }
  Mask closed_neighbors(int v) const { return adj_[v] | vbit(v); }
  int degree(int v) const { return popcount(adj_[v]); }

  void add_edge(int u, int v);

  DegreeProfile degree_profile() const;
  std::vector<Mask> components() const;  // ordered by smallest member
  bool is_connected() const;
  Graph complement() const;
  std::string graph6() const;

  // new vertex is index order(); its neighborhood is nbrs (a subset of the
  // existing vertices)
  Graph with_vertex(Mask nbrs) const;

  // perm[v] = new index of v; perm must be a bijection on 0..n-1
  Graph relabeled(const std::array<std::uint8_t, kMaxVertices>& perm) const;

  bool operator==(const Graph& o) const {
    if (n_ != o.n_) return false;
    for (int v = 0; v < n_; ++v)
      if (adj_[v] != o.adj_[v]) return false;
    return true;
  }

 private:
  static int check_order(int n) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph order out of range");
    return n;
  }
  int n_ = 0;
  std::array<Mask, kMaxVertices> adj_{};
};

struct Induced {
  Graph graph;
  // old_to_new[v] = index in the subgraph, or -1 when v was dropped
  std::array<std::int8_t, kMaxVertices> old_to_new;
  std::array<std::int8_t, kMaxVertices> new_to_old;
};

Induced induced_subgraph(const Graph& g, Mask keep);

// small builders shared by the catalog and tests
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph petersen_graph();

std::vector<std::string> read_graph6_lines(const std::string& path);

}  // namespace cops
