#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/graph.hpp"

namespace cops {

struct CatalogEntry {
  std::string name;
  int n;
  std::vector<std::pair<int, int>> edges;
  std::string note;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_find(const std::string& name);
Graph catalog_graph(const std::string& name);  // throws std::invalid_argument on unknown name

}  // namespace cops
