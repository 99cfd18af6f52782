#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/graph.hpp"

namespace cops {

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CopVerdict {
  bool cops_win = false;
  std::optional<std::vector<int>> certificate;  // winning initial placement, sorted
};

// Exact decision of the k-cop game on a connected graph via retrograde
// analysis over (cop multiset, robber, side) states. Cops place first, the
// robber places with full information, cops move first each round; capture is
// also checked at placement. Throws on k <= 0, disconnected input, or an
// arena larger than max_states.
CopVerdict cop_wins(const Graph& g, int k, std::uint64_t max_states = std::uint64_t{1} << 24);

// max over components; dismantlability decides k = 1, then k ascends
int cop_number(const Graph& g);

// reducible to one vertex by deleting closed-corner vertices (N[v] ⊆ N[u]);
// equivalent to cop number 1 on connected graphs; throws on disconnected input
bool is_dismantlable(const Graph& g);

struct CornerReduction {
  Graph graph;
  std::vector<int> removed;  // original labels, removal order
};

// repeatedly delete v ≠ u with N(v) ⊆ N[u] (smallest v, then smallest u);
// result has no such pair
CornerReduction corner_reduce(const Graph& g);

// replay check: from this placement, following the solved strategy corners the
// robber within the state bound for every robber placement and reply
bool certificate_holds(const Graph& g, const std::vector<int>& placement);

}  // namespace cops
