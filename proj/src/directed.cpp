#include "labcount/directed.hpp"

#include "labcount/errors.hpp"

#include <algorithm>

namespace labcount {

Multigraph directed_path(int edges) {
  if (edges < 1) throw usage_error("directed path needs at least one edge");
  Multigraph g;
  g.n = edges + 1;
  g.directed = true;
  for (int i = 0; i < edges; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

Multigraph reverse_orientation(const Multigraph& g) {
  if (!g.directed) throw usage_error("reverse_orientation requires a directed graph");
  Multigraph r = g;
  for (auto& [u, v] : r.edges) std::swap(u, v);
  return r;
}

DirectedMagicScan directed_magic_scan(const Multigraph& g, long long k_max, bool force) {
  if (!g.directed) throw usage_error("directed_magic_scan requires a directed graph");
  if (k_max < 0) throw usage_error("k_max must be nonnegative");

  DirectedMagicScan report;
  report.k_max = k_max;
  report.labelings_scanned = int_pow(Int(k_max + 1), static_cast<unsigned long>(g.edge_count()));
  report.equal_sum_labelings = 0;

  EnumSpec spec;
  spec.k = k_max;
  spec.positivity = Positivity::nonneg;
  spec.predicate = LabelingPredicate::none;
  spec.force = force;
  enumerate_labelings(g, spec, [&](const Labeling& labels) {
    auto sums = vertex_sums(g, labels);
    bool equal = true;
    for (int v = 1; v < g.n; ++v) equal = equal && sums[v] == sums[0];
    if (equal) {
      ++report.equal_sum_labelings;
      long long value = g.n > 0 ? sums[0] : 0;
      if (!std::binary_search(report.achieved_values.begin(), report.achieved_values.end(),
                              value)) {
        report.achieved_values.insert(
            std::upper_bound(report.achieved_values.begin(), report.achieved_values.end(), value),
            value);
      }
    }
    return true;
  });
  report.nonzero_value_found =
      std::any_of(report.achieved_values.begin(), report.achieved_values.end(),
                  [](long long v) { return v != 0; });
  return report;
}

PeriodExperiment directed_period_experiment(int path_edges, long long k_max, bool force) {
  if (path_edges < 2) throw usage_error("period experiment needs at least 2 path edges");
  if (path_edges > 8 && !force)
    throw guardrail_error("period experiment guardrail: path length > 8 (use force)");
  if (k_max < 0) throw usage_error("k_max must be nonnegative");

  Multigraph path = directed_path(path_edges);
  VertexSubset interior;
  for (int v = 1; v < path_edges; ++v) interior.push_back(v);

  PeriodExperiment report;
  report.path_edges = path_edges;
  report.k_max = k_max;
  for (long long k = 0; k <= k_max; ++k)
    report.sequence.push_back(
        count_block_magic(path, {interior}, k, Positivity::nonneg, Engine::dp, force));
  report.fit = detect_minimal(report.sequence, std::max(4, path_edges), 4, 2);
  return report;
}

std::optional<Labeling> search_directed_antimagic(const Multigraph& g, bool force) {
  if (!g.directed) throw usage_error("search_directed_antimagic requires a directed graph");
  if (g.edge_count() > 10 && !force)
    throw guardrail_error("directed antimagic search guardrail: |E| > 10 (use force)");
  // Same backtracking core as the undirected strict search, over oriented sums.
  return search_strict_antimagic(g, true);
}

}  // namespace labcount
