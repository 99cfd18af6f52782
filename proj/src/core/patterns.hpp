#pragma once

#include <optional>
#include <string>

#include "core/graph.hpp"

namespace cops {

struct AlphaGamma {
  int alpha;
  int gamma;
};

int independence_number(const Graph& g);
// witness of k pairwise non-adjacent vertices, if one exists
std::optional<Mask> find_independent_set(const Graph& g, int k);
bool is_kk1_free(const Graph& g, int k);

int domination_number(const Graph& g);  // throws on the empty graph
std::optional<Mask> find_dominating_set(const Graph& g, int k);

AlphaGamma alpha_gamma(const Graph& g);

bool has_clique(const Graph& g, Mask within, int k);

// not-necessarily-induced subgraph containment; disjoint unions of cliques are
// dispatched to clique search, everything else to backtracking injection
bool contains_subgraph(const Graph& g, const Graph& pattern);

bool isomorphic_to(const Graph& g, const std::string& catalog_name);

// V(g) coverable by two cliques, i.e. the complement is bipartite
bool two_clique_coverable(const Graph& g);

}  // namespace cops
