#include "core/lemmas.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "core/canon.hpp"
#include "core/catalog.hpp"
#include "core/generate.hpp"
#include "core/patterns.hpp"
#include "core/solver.hpp"

namespace cops {

namespace {

std::string mask_to_string(Mask m) {
  std::ostringstream out;
  bool first = true;
  for (; m; m &= m - 1) {
    if (!first) out << ",";
    out << lowest_vertex(m);
    first = false;
  }
  return out.str();
}

}  // namespace

std::vector<ConditionReport> check_structural_conditions(const Graph& g, bool require_connected) {
  std::vector<ConditionReport> out;
  if (require_connected) {
    ConditionReport r{"connected", g.is_connected(), "", -1};
    if (!r.holds) r.witness = "component {" + mask_to_string(g.components()[0]) + "} is proper";
    out.push_back(std::move(r));
  }
  {
    ConditionReport r{"4k1-free", true, "", -1};
    if (auto w = find_independent_set(g, 4)) {
      r.holds = false;
      r.witness = "independent set {" + mask_to_string(*w) + "}";
    }
    out.push_back(std::move(r));
  }
  {
    ConditionReport r{"max-degree-6", true, "", -1};
    for (int v = 0; v < g.order() && r.holds; ++v)
      if (g.degree(v) > 6) {
        r.holds = false;
        r.witness = "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v));
      }
    out.push_back(std::move(r));
  }
  {
    ConditionReport r{"corner-free", true, "", -1};
    for (int x = 0; x < g.order() && r.holds; ++x)
      for (int y = 0; y < g.order(); ++y) {
        if (x == y) continue;
        if ((g.neighbors(x) & ~g.closed_neighbors(y)) == 0) {
          r.holds = false;
          r.witness = "N(" + std::to_string(x) + ") within N[" + std::to_string(y) + "]";
          break;
        }
      }
    out.push_back(std::move(r));
  }
  return out;
}

ConditionReport check_degree6_remainders(const Graph& g) {
  if (g.order() != 13) throw std::invalid_argument("degree-6 remainder check expects order 13");
  ConditionReport r{"degree-6-remainders", true, "", 0};
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 6) continue;
    ++r.count;
    Graph rem = induced_subgraph(g, g.vertices() & ~g.closed_neighbors(v)).graph;
    if (!isomorphic_to(rem, "B6") && !isomorphic_to(rem, "T6")) {
      r.holds = false;
      r.witness = "vertex " + std::to_string(v) + " leaves " + rem.graph6();
      return r;
    }
  }
  return r;
}

ConditionReport check_degree5_remainders(const Graph& h) {
  if (h.order() != 10) throw std::invalid_argument("degree-5 remainder check expects order 10");
  ConditionReport r{"degree-5-remainders", true, "", 0};
  for (int x = 0; x < h.order(); ++x) {
    if (h.degree(x) != 5) continue;
    ++r.count;
    Graph rem = induced_subgraph(h, h.vertices() & ~h.closed_neighbors(x)).graph;
    if (!isomorphic_to(rem, "K3+K1") && !isomorphic_to(rem, "2K2") && !isomorphic_to(rem, "P4")) {
      r.holds = false;
      r.witness = "vertex " + std::to_string(x) + " leaves " + rem.graph6();
      return r;
    }
  }
  return r;
}

std::vector<ConditionReport> verify_lemma_3k1_against(const std::vector<Graph>& targets) {
  std::vector<PrunePredicate> prunes{{"3k1-free", [](const Graph& g) { return is_kk1_free(g, 3); }, true}};
  std::vector<Graph> classes = generate(6, prunes);
  ConditionReport r{"every-3k1-free-6-class-contains-target", true, "", static_cast<long long>(classes.size())};
  for (const Graph& g : classes) {
    bool hit = false;
    for (const Graph& t : targets)
      if (contains_subgraph(g, t)) {
        hit = true;
        break;
      }
    if (!hit) {
      r.holds = false;
      r.witness = g.graph6();
      break;
    }
  }
  return {r};
}

std::vector<ConditionReport> verify_lemma_3k1() {
  return verify_lemma_3k1_against({catalog_graph("K5+K1"), catalog_graph("K4+K2"),
                                   catalog_graph("K3+K3"), catalog_graph("B6")});
}

std::vector<ConditionReport> verify_six_vertex_classifications() {
  std::vector<ConditionReport> out;
  std::vector<Graph> all6 = generate(6, {});

  auto forms_of = [](const std::vector<std::string>& names) {
    std::set<CanonicalForm> s;
    for (const auto& n : names) s.insert(canonical_form(catalog_graph(n)));
    return s;
  };
  auto report_match = [](ConditionReport& r, const std::set<CanonicalForm>& got,
                         const std::map<CanonicalForm, std::string>& got_g6,
                         const std::set<CanonicalForm>& expect) {
    r.count = static_cast<long long>(got.size());
    r.holds = got == expect;
    if (!r.holds) {
      std::ostringstream w;
      w << "classes found:";
      for (const auto& f : got) w << " " << got_g6.at(f);
      r.witness = w.str();
    }
  };

  // two disjoint triangles, grouped by crossing-edge count |E| - 6, filtered to
  // cop number >= 2 and no K4+K2 subgraph
  Graph k3k3 = catalog_graph("K3+K3");
  Graph k4k2 = catalog_graph("K4+K2");
  std::map<int, std::set<CanonicalForm>> by_cut;
  std::map<CanonicalForm, std::string> g6_of;
  for (const Graph& g : all6) {
    if (!contains_subgraph(g, k3k3)) continue;
    if (contains_subgraph(g, k4k2)) continue;
    if (cop_number(g) < 2) continue;
    CanonicalForm f = canonical_form(g);
    by_cut[g.edge_count() - 6].insert(f);
    g6_of[f] = g.graph6();
  }
  const std::map<int, std::vector<std::string>> expected = {
      {0, {}},          {1, {}},
      {2, {"K3K3e2"}},  {3, {"T6", "K3K3e3"}},
      {4, {"K3K3e4a", "K3K3e4b"}},
      {5, {}},          {6, {"K3K3e6"}},
      {7, {}},          {8, {}},
      {9, {}},
  };
  for (const auto& [cut, names] : expected) {
    ConditionReport r{"two-triangles-crossing-" + std::to_string(cut), true, "", 0};
    report_match(r, by_cut.count(cut) ? by_cut[cut] : std::set<CanonicalForm>{}, g6_of, forms_of(names));
    out.push_back(std::move(r));
  }

  // B6 subgraph, not coverable by two cliques, cop number >= 2
  Graph b6 = catalog_graph("B6");
  std::set<CanonicalForm> b6route;
  for (const Graph& g : all6) {
    if (!contains_subgraph(g, b6)) continue;
    if (two_clique_coverable(g)) continue;
    if (cop_number(g) < 2) continue;
    CanonicalForm f = canonical_form(g);
    b6route.insert(f);
    g6_of[f] = g.graph6();
  }
  {
    ConditionReport r{"b6-not-two-clique-coverable", true, "", 0};
    report_match(r, b6route, g6_of, forms_of({"B6", "B6plus"}));
    out.push_back(std::move(r));
  }

  // every exceptional class is exactly two-cop
  {
    ConditionReport r{"exceptional-classes-cop-number-2", true, "", 0};
    for (const char* name : {"T6", "K3K3e2", "K3K3e3", "K3K3e4a", "K3K3e4b", "K3K3e6", "B6", "B6plus"}) {
      ++r.count;
      if (cop_number(catalog_graph(name)) != 2) {
        r.holds = false;
        r.witness = name;
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string reports_to_json(const std::vector<ConditionReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j{{"id", r.id}, {"holds", r.holds}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (r.count >= 0) j["count"] = r.count;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace cops
