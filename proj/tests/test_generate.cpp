#include <doctest.h>

#include <set>
#include <stdexcept>

#include "core/canon.hpp"
#include "core/catalog.hpp"
#include "core/generate.hpp"
#include "core/graph.hpp"
#include "core/patterns.hpp"
#include "oracles.hpp"

using namespace cops;

namespace {

std::set<CanonicalForm> forms_of(const std::vector<Graph>& gs) {
  std::set<CanonicalForm> s;
  for (const Graph& g : gs) s.insert(canonical_form(g));
  return s;
}

std::set<CanonicalForm> labeled_dedup(int n) {
  std::set<CanonicalForm> s;
  for (const Graph& g : oracle::all_labeled_graphs(n)) s.insert(canonical_form(g));
  return s;
}

const PrunePredicate kTriangleFree{
    "triangle-free", [](const Graph& g) { return !contains_subgraph(g, complete_graph(3)); },
    true};

bool is_forest(const Graph& g) {
  return g.edge_count() + static_cast<int>(g.components().size()) == g.order();
}

}  // namespace

TEST_CASE("unconstrained generation matches labeled dedup") {
  const int expected[] = {1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) {
    std::vector<Graph> out = generate(n, {});
    CHECK(out.size() == static_cast<std::size_t>(expected[n]));
    if (n >= 1) CHECK(forms_of(out) == labeled_dedup(n));
    // one representative per class, emitted in sorted order
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
      CHECK(canonical_form(out[i]) < canonical_form(out[i + 1]));
    for (const Graph& g : out) CHECK(g.order() == n);
  }
  // count on 5 re-derived without canonical forms at all
  CHECK(oracle::brute_class_count(4) == 11);
  CHECK(oracle::brute_class_count(5) == 34);
}

TEST_CASE("hereditary pruning equals filtering the full enumeration") {
  std::vector<Graph> all6 = generate(6, {});

  std::vector<Graph> tf = generate(6, {kTriangleFree});
  CHECK(tf.size() == 38);
  std::set<CanonicalForm> expect;
  for (const Graph& g : all6)
    if (kTriangleFree.test(g)) expect.insert(canonical_form(g));
  CHECK(forms_of(tf) == expect);

  PrunePredicate degcap{"max-degree-2", [](const Graph& g) { return g.degree_profile().max <= 2; },
                        true};
  std::set<CanonicalForm> expect_deg;
  for (const Graph& g : all6)
    if (degcap.test(g)) expect_deg.insert(canonical_form(g));
  CHECK(forms_of(generate(6, {degcap})) == expect_deg);

  PrunePredicate k41{"4k1-free", [](const Graph& g) { return is_kk1_free(g, 4); }, true};
  std::set<CanonicalForm> expect41;
  for (const Graph& g : all6)
    if (k41.test(g)) expect41.insert(canonical_form(g));
  CHECK(forms_of(generate(6, {k41})) == expect41);
}

TEST_CASE("non-hereditary predicates act as final filters") {
  std::vector<Graph> all6 = generate(6, {});
  PrunePredicate conn{"connected", [](const Graph& g) { return g.is_connected(); }, false};
  std::vector<Graph> out = generate(6, {conn});
  CHECK(out.size() == 112);
  std::set<CanonicalForm> expect;
  for (const Graph& g : all6)
    if (g.is_connected()) expect.insert(canonical_form(g));
  CHECK(forms_of(out) == expect);
}

TEST_CASE("tree counts by order") {
  const int expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  PrunePredicate forest{"forest", is_forest, true};
  for (int n = 1; n <= 10; ++n) {
    int trees = 0;
    for (const Graph& g : generate(n, {forest}, 2))
      if (g.is_connected()) ++trees;
    CHECK(trees == expected[n]);
  }
}

TEST_CASE("emitted graphs satisfy hereditary predicates on every deletion") {
  PrunePredicate k41{"4k1-free", [](const Graph& g) { return is_kk1_free(g, 4); }, true};
  for (const Graph& g : generate(7, {k41}))
    for (int v = 0; v < g.order(); ++v)
      CHECK(is_kk1_free(induced_subgraph(g, g.vertices() & ~vbit(v)).graph, 4));
}

TEST_CASE("worker count does not change the output") {
  std::vector<Graph> a = generate(7, {}, 1);
  std::vector<Graph> b = generate(7, {}, 4);
  CHECK(a.size() == 1044);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

  PrunePredicate degcap{"max-degree-4", [](const Graph& g) { return g.degree_profile().max <= 4; },
                        true};
  std::vector<Graph> c = generate(8, {degcap}, 1);
  std::vector<Graph> d = generate(8, {degcap}, 3);
  REQUIRE(c.size() == d.size());
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i] == d[i]);
}

TEST_CASE("generation rejects out-of-range orders") {
  CHECK_THROWS_AS(generate(32, {}), std::invalid_argument);
  CHECK_THROWS_AS(generate(-1, {}), std::invalid_argument);
}
