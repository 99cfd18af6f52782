#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace cops {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class PipelineType : char { A = 'A', B = 'B', C = 'C', D = 'D' };

PipelineType pipeline_type_from(char c);  // throws std::invalid_argument

struct PipelineConfig {
  PipelineType type = PipelineType::C;
  std::string out_dir;
  int workers = 0;       // 0: default_workers()
  bool raw_counts = false;  // solve every raw attachment instead of one per class
  // unset: per-type default (skipped for A-C, required for D)
  std::optional<bool> skip_connectedness;
};

struct PipelineReport {
  PipelineType type = PipelineType::C;
  long long step1_count = 0;
  long long step2_raw_count = 0;
  long long step2_dedup_count = 0;
  std::vector<std::string> violations;  // canonical graph6, sorted
  long long step1_ms = 0;
  long long step2_ms = 0;
  long long step3_ms = 0;
  long long total_ms = 0;
};

// COPSEARCH_WORKERS when set, else hardware concurrency, else 1
int default_workers();

// base graphs for the type: order/degree/edge caps hereditary, the degree-5
// remainder predicate as a final filter (type A only)
std::vector<Graph> run_step1(PipelineType type, int workers = 1);

// all anchor attachments to one base graph producing a 13-vertex candidate:
// anchor degrees and mutual adjacency fixed by the type, anchor sets reduced
// by anchor permutation and base-graph automorphisms, then filtered by the
// structural conditions and the degree-6 remainder condition. use_cover_prune
// toggles the every-base-vertex-covered shortcut (types A/C); disabling it
// must not change the output.
std::vector<Graph> run_step2(PipelineType type, const Graph& h, bool check_connected,
                             bool use_cover_prune = true);

bool default_check_connected(PipelineType type);

// cop numbers of the candidates; graphs needing more than two cops come back
// as sorted canonical graph6 strings
std::vector<std::string> run_step3(const std::vector<Graph>& candidates, int workers = 1);

// steps 1-3 plus artifacts: <out_dir>/step1.g6, candidates.g6, report.json
PipelineReport run_pipeline(const PipelineConfig& config);

std::string report_to_json(const PipelineReport& report);

}  // namespace cops
