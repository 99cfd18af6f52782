#pragma once

#include <string>
#include <vector>

#include "core/graph.hpp"

namespace cops {

struct ConditionReport {
  std::string id;
  bool holds = true;
  std::string witness;   // empty when none
  long long count = -1;  // optional payload (class counts); -1 when unused
};

// the structural bullets of the standing assumption set: connected (togglable),
// 4K1-free, max degree 6, and no pair x != y with N(x) ⊆ N[y]
std::vector<ConditionReport> check_structural_conditions(const Graph& g,
                                                         bool require_connected = true);

// every degree-6 vertex v has g - N[v] isomorphic to B6 or T6; order 13 required
ConditionReport check_degree6_remainders(const Graph& g);

// every degree-5 vertex x of a 10-vertex h has h - N[x] isomorphic to one of
// K3+K1, 2K2, P4; order 10 required
ConditionReport check_degree5_remainders(const Graph& h);

// every 6-vertex 3K1-free isomorphism class contains one of K5+K1, K4+K2,
// K3+K3, B6 as a subgraph; count reports the number of classes checked
std::vector<ConditionReport> verify_lemma_3k1();
std::vector<ConditionReport> verify_lemma_3k1_against(const std::vector<Graph>& targets);

// the finite 6-vertex classifications: two disjoint triangles with each
// crossing-edge count, and the B6-containing non-two-clique-coverable case
std::vector<ConditionReport> verify_six_vertex_classifications();

std::string reports_to_json(const std::vector<ConditionReport>& reports);

}  // namespace cops
