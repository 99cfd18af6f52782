#include "core/catalog.hpp"

#include <stdexcept>

namespace cops {

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"B6", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 5}, {4, 5}},
       "C5 (0..4) plus vertex 5 adjacent to three consecutive cycle vertices"},
      {"T6", 6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}},
       "triangular prism: two triangles joined by a perfect matching"},
      {"K5+K1", 6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
       "K5 plus an isolated vertex"},
      {"K4+K2", 6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}},
       "K4 plus a disjoint edge"},
      {"K3+K3", 6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}},
       "two disjoint triangles"},
      {"K3+K1", 4, {{0, 1}, {1, 2}, {0, 2}},
       "triangle plus an isolated vertex"},
      {"2K2", 4, {{0, 1}, {2, 3}},
       "two disjoint edges"},
      {"P4", 4, {{0, 1}, {1, 2}, {2, 3}},
       "path on four vertices"},
      {"K3K3e2", 6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {1, 3}, {2, 5}},
       "two triangles joined by two crossing edges meeting distinct vertices on each side"},
      {"K3K3e3", 6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {0, 4}, {2, 5}},
       "two triangles joined by three crossing edges, two sharing an endpoint"},
      {"K3K3e4a", 6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {0, 5}, {2, 5}, {1, 4}},
       "two triangles joined by four crossing edges; the two degree-4 vertices are adjacent"},
      {"K3K3e4b", 6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {0, 4}, {2, 5}, {1, 5}},
       "two triangles joined by four crossing edges; the two degree-4 vertices are not adjacent"},
      {"K3K3e6", 6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {1, 3}, {1, 5}, {2, 5}, {2, 4}, {0, 3}, {0, 4}},
       "two triangles joined by six crossing edges forming the octahedron"},
      {"B6plus", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {5, 1}, {5, 2}, {5, 3}, {5, 4}},
       "C5 (0..4) plus vertex 5 adjacent to four consecutive cycle vertices"},
  };
  return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

Graph catalog_graph(const std::string& name) {
  const CatalogEntry* e = catalog_find(name);
  if (!e) throw std::invalid_argument("unknown catalog pattern: " + name);
  return Graph::from_edges(e->n, e->edges);
}

}  // namespace cops
