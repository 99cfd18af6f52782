#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include "core/canon.hpp"
#include "core/catalog.hpp"
#include "core/graph.hpp"
#include "core/lemmas.hpp"
#include "core/patterns.hpp"
#include "core/pipeline.hpp"
#include "core/solver.hpp"

using namespace cops;

namespace {

const std::vector<Graph>& step1_c() {
  static const std::vector<Graph> graphs = run_step1(PipelineType::C, 2);
  return graphs;
}

std::multiset<CanonicalForm> form_multiset(const std::vector<Graph>& gs) {
  std::multiset<CanonicalForm> s;
  for (const Graph& g : gs) s.insert(canonical_form(g));
  return s;
}

void check_common_survivor_shape(const Graph& g, const Graph& h) {
  REQUIRE(g.order() == 13);
  CHECK(induced_subgraph(g, all_vertices(h.order())).graph == h);
  for (const auto& r : check_structural_conditions(g, false)) {
    CAPTURE(r.id);
    CHECK(r.holds);
  }
  CHECK(check_degree6_remainders(g).holds);
  CHECK(Graph::decode_graph6(g.graph6()) == g);
}

}  // namespace

TEST_CASE("pipeline type parsing and defaults") {
  CHECK(pipeline_type_from('A') == PipelineType::A);
  CHECK(pipeline_type_from('b') == PipelineType::B);
  CHECK(pipeline_type_from('C') == PipelineType::C);
  CHECK(pipeline_type_from('d') == PipelineType::D);
  CHECK_THROWS_AS(pipeline_type_from('E'), std::invalid_argument);
  CHECK(default_workers() >= 1);
  CHECK_FALSE(default_check_connected(PipelineType::A));
  CHECK_FALSE(default_check_connected(PipelineType::B));
  CHECK_FALSE(default_check_connected(PipelineType::C));
  CHECK(default_check_connected(PipelineType::D));
}

TEST_CASE("base-graph enumeration for the low-degree type") {
  const auto& hs = step1_c();
  CHECK(hs.size() == 783);
  for (std::size_t i = 0; i + 1 < hs.size(); ++i)
    CHECK(canonical_form(hs[i]) < canonical_form(hs[i + 1]));
  for (const Graph& h : hs) {
    CHECK(h.order() == 10);
    CHECK(h.degree_profile().max <= 4);
    CHECK(is_kk1_free(h, 4));
  }
}

TEST_CASE("base graphs of the wrong order are rejected") {
  CHECK_THROWS_AS(run_step2(PipelineType::C, Graph(5), false), std::invalid_argument);
  CHECK_THROWS_AS(run_step2(PipelineType::B, Graph(10), false), std::invalid_argument);
}

TEST_CASE("three non-adjacent anchors of bounded degree") {
  const auto& hs = step1_c();
  int checked = 0;
  for (std::size_t i = 0; i < hs.size(); i += 50) {
    const Graph& h = hs[i];
    for (const Graph& g : run_step2(PipelineType::C, h, false)) {
      ++checked;
      check_common_survivor_shape(g, h);
      Mask covered = 0;
      for (int a = 10; a < 13; ++a) {
        CHECK(g.degree(a) <= 6);
        covered |= g.neighbors(a);
        for (int b = a + 1; b < 13; ++b) CHECK_FALSE(g.has_edge(a, b));
      }
      // non-adjacent anchors must jointly cover the base
      CHECK((covered & all_vertices(10)) == all_vertices(10));
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("three non-adjacent anchors of degree exactly six") {
  // every max-degree-4 base is also legal for the degree-6 variant: its edge
  // cap and degree-5 remainder condition hold vacuously
  const auto& hs = step1_c();
  long long survivors = 0;
  int productive = 0;
  for (const Graph& h : hs) {
    auto out = run_step2(PipelineType::A, h, false);
    if (!out.empty()) ++productive;
    for (const Graph& g : out) {
      ++survivors;
      check_common_survivor_shape(g, h);
      for (int a = 10; a < 13; ++a) {
        CHECK(g.degree(a) == 6);
        for (int b = a + 1; b < 13; ++b) CHECK_FALSE(g.has_edge(a, b));
      }
    }
  }
  CHECK(survivors == 84);
  CHECK(productive == 39);
}

TEST_CASE("three mutually adjacent anchors form a triangle") {
  const auto& hs = step1_c();
  long long survivors = 0;
  int productive = 0;
  for (const Graph& h : hs) {
    auto out = run_step2(PipelineType::D, h, true);
    if (!out.empty()) ++productive;
    for (const Graph& g : out) {
      ++survivors;
      check_common_survivor_shape(g, h);
      CHECK(g.is_connected());
      for (int a = 10; a < 13; ++a) {
        CHECK(g.degree(a) == 6);
        for (int b = a + 1; b < 13; ++b) CHECK(g.has_edge(a, b));
      }
    }
  }
  CHECK(survivors == 36);
  CHECK(productive == 16);
}

TEST_CASE("two anchors cover every degree-six vertex") {
  // order-11 bases known to admit attachments, lifted from the enumeration
  const struct {
    const char* g6;
    std::size_t survivors;
  } bases[] = {{"J@KyC@FevE?", 2}, {"J@KyCDFav_?", 3}, {"J@KyCDFeVC?", 2}};
  for (const auto& [g6, expect] : bases) {
    Graph h = Graph::decode_graph6(g6);
    REQUIRE(h.order() == 11);
    REQUIRE(h.degree_profile().max <= 5);
    REQUIRE(is_kk1_free(h, 4));
    auto out = run_step2(PipelineType::B, h, false);
    CHECK(out.size() == expect);
    for (const Graph& g : out) {
      check_common_survivor_shape(g, h);
      CHECK(g.degree(11) == 6);
      CHECK(g.degree(12) == 6);
      CHECK_FALSE(g.has_edge(11, 12));
      Mask reach = g.closed_neighbors(11) | g.closed_neighbors(12);
      for (int v = 0; v < 13; ++v)
        if (g.degree(v) == 6) CHECK((reach & vbit(v)) != 0);
    }
  }
}

TEST_CASE("the coverage shortcut does not change the survivor set") {
  const auto& hs = step1_c();
  for (std::size_t i = 0; i < hs.size(); i += 10) {
    auto with_c = run_step2(PipelineType::C, hs[i], false, true);
    auto without_c = run_step2(PipelineType::C, hs[i], false, false);
    CHECK(form_multiset(with_c) == form_multiset(without_c));
    auto with_a = run_step2(PipelineType::A, hs[i], false, true);
    auto without_a = run_step2(PipelineType::A, hs[i], false, false);
    CHECK(form_multiset(with_a) == form_multiset(without_a));
  }
}

TEST_CASE("violation scan flags exactly the graphs needing three cops") {
  Graph plant3 = disjoint_union(petersen_graph(), Graph(3));  // component max 3
  REQUIRE(plant3.order() == 13);
  REQUIRE(cop_number(plant3) == 3);
  Graph benign2 = cycle_graph(13);
  Graph benign1 = path_graph(13);
  auto violations = run_step3({benign2, plant3, benign1}, 2);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0] == canonical_representative(plant3).graph6());
  CHECK(run_step3({benign1, benign2}, 1).empty());
}

TEST_CASE("report serialization carries all counters") {
  PipelineReport rep;
  rep.type = PipelineType::B;
  rep.step1_count = 5;
  rep.step2_raw_count = 9;
  rep.step2_dedup_count = 4;
  rep.violations = {"Bw"};
  rep.step1_ms = 1;
  rep.step2_ms = 2;
  rep.step3_ms = 3;
  rep.total_ms = 6;
  auto j = nlohmann::json::parse(report_to_json(rep));
  CHECK(j["type"] == "B");
  CHECK(j["step1_count"] == 5);
  CHECK(j["step2_raw_count"] == 9);
  CHECK(j["step2_dedup_count"] == 4);
  CHECK(j["violations"] == nlohmann::json::array({"Bw"}));
  CHECK(j["elapsed_ms"]["step1"] == 1);
  CHECK(j["elapsed_ms"]["step2"] == 2);
  CHECK(j["elapsed_ms"]["step3"] == 3);
  CHECK(j["elapsed_ms"]["total"] == 6);
}

TEST_CASE("full run of the low-degree type writes consistent artifacts") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "copsearch_pipeline_c";
  fs::remove_all(dir);

  PipelineConfig cfg;
  cfg.type = PipelineType::C;
  cfg.out_dir = dir.string();
  cfg.workers = 2;
  PipelineReport rep = run_pipeline(cfg);

  CHECK(rep.step1_count == 783);
  CHECK(rep.step2_raw_count == 10754);
  CHECK(rep.step2_dedup_count == 992);
  CHECK(rep.violations.empty());

  auto step1 = read_graph6_lines((dir / "step1.g6").string());
  CHECK(static_cast<long long>(step1.size()) == rep.step1_count);
  auto cands = read_graph6_lines((dir / "candidates.g6").string());
  REQUIRE(static_cast<long long>(cands.size()) == rep.step2_dedup_count);
  for (std::size_t i = 0; i + 1 < cands.size(); ++i) CHECK(cands[i] < cands[i + 1]);
  for (std::size_t i = 0; i < cands.size(); i += 50) {
    Graph g = Graph::decode_graph6(cands[i]);
    CHECK(g.order() == 13);
    CHECK(canonical_representative(g).graph6() == cands[i]);
  }

  std::ifstream in(dir / "report.json");
  REQUIRE(in.good());
  nlohmann::json j = nlohmann::json::parse(in);
  CHECK(j["type"] == "C");
  CHECK(j["step1_count"] == rep.step1_count);
  CHECK(j["step2_dedup_count"] == rep.step2_dedup_count);
  CHECK(j["violations"].empty());
  fs::remove_all(dir);
}
