#pragma once

#include <functional>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace cops {

// hereditary predicates prune every intermediate order; non-hereditary ones
// only filter the emitted target-order graphs
struct PrunePredicate {
  std::string name;
  std::function<bool(const Graph&)> test;
  bool hereditary = true;
};

// One canonical representative per isomorphism class on n vertices passing all
// predicates, sorted by canonical form. Exhaustive for hereditary prunes
// (every graph in the class has a deletion chain inside the class).
std::vector<Graph> generate(int n, const std::vector<PrunePredicate>& prunes, int workers = 1);

}  // namespace cops
