#pragma once

#include "labcount/multigraph.hpp"
#include "labcount/report.hpp"

#include <optional>
#include <string>

namespace labcount {

struct SuiteScope {
  int min_vertices = 1;
  int max_vertices = 4;
  int max_edges = -1;   // -1: unfiltered
  long long r_max = 20;
  long long k_max = -1;  // -1: suite-specific default
  long long t_max = 7;
  int path_max = 6;
  bool include_multi = false;
  std::optional<Multigraph> graph;  // single-graph mode where supported
  BlockSpec blocks;                 // single-graph suites; empty means {V}
  bool force = false;
};

/// Names: stanley-period, pml-period, partial-period, reciprocity, pml2,
/// lemma34, lemma7, directed-conjecture, directed-period,
/// strict-antimagic-period. Returns {records, status, summary}; records are
/// sorted by graph enumeration index and disagreements never crash: each
/// record carries measured values, the claim, and an agrees flag.
json run_verification_suite(const std::string& name, const SuiteScope& scope);

/// Families: connected, connected-multi. Checks: strict-antimagic,
/// weak-antimagic, pml2.
json run_survey(const std::string& family, const std::string& check, const SuiteScope& scope);

/// All connected graphs with min_vertices <= n <= max_vertices (and at most
/// max_edges edges when set), in enumeration order.
std::vector<Multigraph> family_graphs(const SuiteScope& scope);

/// All orientations of every connected simple graph in the scope, ordered by
/// underlying graph then orientation mask (bit e reverses edge e).
std::vector<Multigraph> digraph_family(const SuiteScope& scope);

}  // namespace labcount
