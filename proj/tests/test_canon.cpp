#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "core/canon.hpp"
#include "core/catalog.hpp"
#include "core/graph.hpp"
#include "oracles.hpp"

using namespace cops;

namespace {

Perm random_perm(int n, std::mt19937& rng) {
  Perm p{};
  std::vector<std::uint8_t> v(n);
  std::iota(v.begin(), v.end(), std::uint8_t{0});
  std::shuffle(v.begin(), v.end(), rng);
  std::copy(v.begin(), v.end(), p.begin());
  return p;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937 rng(4242);
  std::vector<Graph> gs;
  for (const auto& e : catalog()) gs.push_back(catalog_graph(e.name));
  gs.push_back(petersen_graph());
  for (int rep = 0; rep < 20; ++rep)
    gs.push_back(oracle::random_graph(2 + static_cast<int>(rng() % 12), 0.4, rng));
  for (const Graph& g : gs) {
    CanonicalForm f = canonical_form(g);
    for (int rep = 0; rep < 100; ++rep)
      CHECK(canonical_form(g.relabeled(random_perm(g.order(), rng))) == f);
  }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
  CHECK_FALSE(canonical_form(path_graph(4)) == canonical_form(cycle_graph(4)));
  CHECK_FALSE(canonical_form(catalog_graph("B6")) == canonical_form(catalog_graph("T6")));
}

TEST_CASE("canonical form agrees with permutation search on small graphs") {
  std::mt19937 rng(7);
  std::vector<Graph> gs;
  for (int rep = 0; rep < 40; ++rep)
    gs.push_back(oracle::random_graph(5 + static_cast<int>(rng() % 2), 0.5, rng));
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      bool same_form = canonical_form(gs[i]) == canonical_form(gs[j]);
      CHECK(same_form == oracle::brute_isomorphic(gs[i], gs[j]));
    }
}

TEST_CASE("distinct forms over all labeled graphs on 4 vertices") {
  std::set<CanonicalForm> forms;
  for (const Graph& g : oracle::all_labeled_graphs(4)) forms.insert(canonical_form(g));
  CHECK(forms.size() == 11);
}

TEST_CASE("are_isomorphic") {
  std::mt19937 rng(11);
  Graph t6 = catalog_graph("T6");
  CHECK(are_isomorphic(t6, t6.relabeled(random_perm(6, rng))));
  CHECK_FALSE(are_isomorphic(catalog_graph("B6"), t6));
  CHECK_FALSE(are_isomorphic(complete_graph(3), catalog_graph("K3+K1")));  // order mismatch
  CHECK(are_isomorphic(Graph(0), Graph(0)));
}

TEST_CASE("canonical_analysis returns a consistent labeling and automorphisms") {
  std::mt19937 rng(31);
  std::vector<Graph> gs = {catalog_graph("B6"), catalog_graph("T6"), petersen_graph(),
                           path_graph(6), cycle_graph(9)};
  for (int rep = 0; rep < 20; ++rep)
    gs.push_back(oracle::random_graph(3 + static_cast<int>(rng() % 8), 0.5, rng));
  for (const Graph& g : gs) {
    CanonResult res = canonical_analysis(g);
    // labeling is a bijection and actually produces the canonical representative
    std::vector<bool> hit(g.order(), false);
    for (int v = 0; v < g.order(); ++v) {
      REQUIRE(res.labeling[v] < g.order());
      hit[res.labeling[v]] = true;
    }
    for (int v = 0; v < g.order(); ++v) CHECK(hit[v]);
    Graph rep = g.relabeled(res.labeling);
    CHECK(rep == canonical_representative(g));
    CHECK(canonical_form(rep) == res.form);
    for (const Perm& a : res.aut_generators) CHECK(g.relabeled(a) == g);
  }
}

TEST_CASE("vertex orbits from automorphism generators") {
  {
    auto res = canonical_analysis(cycle_graph(5));
    auto orb = vertex_orbits(5, res.aut_generators);
    for (int v = 0; v < 5; ++v) CHECK(orb[v] == 0);
  }
  {
    auto res = canonical_analysis(petersen_graph());
    auto orb = vertex_orbits(10, res.aut_generators);
    for (int v = 0; v < 10; ++v) CHECK(orb[v] == 0);
  }
  {
    // Aut(B6) is the Klein group generated by (0 5) and (1 4)(2 3)
    auto res = canonical_analysis(catalog_graph("B6"));
    auto orb = vertex_orbits(6, res.aut_generators);
    CHECK(orb[0] == 0);
    CHECK(orb[1] == 1);
    CHECK(orb[2] == 2);
    CHECK(orb[3] == 2);
    CHECK(orb[4] == 1);
    CHECK(orb[5] == 0);
  }
}
