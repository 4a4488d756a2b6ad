#pragma once

#include "labcount/antimagic.hpp"
#include "labcount/labelings.hpp"
#include "labcount/multigraph.hpp"
#include "labcount/quasipoly.hpp"

#include <optional>
#include <vector>

namespace labcount {

/// The directed path v_0 -> v_1 -> ... -> v_edges.
Multigraph directed_path(int edges);

/// Every edge reversed; negates all oriented sums.
Multigraph reverse_orientation(const Multigraph& g);

struct DirectedMagicScan {
  long long k_max = 0;
  Int labelings_scanned;
  Int equal_sum_labelings;
  std::vector<long long> achieved_values;  // sorted distinct common sums
  bool nonzero_value_found = false;
};

/// Enumerates labelings with labels <= k_max whose oriented sums are all
/// equal and reports the achieved common values. Real skew matrices admit
/// eigenvalue 0, so the reading checked here is: no magic labeling of
/// nonzero index.
DirectedMagicScan directed_magic_scan(const Multigraph& g, long long k_max,
                                      bool force = false);

struct PeriodExperiment {
  int path_edges = 0;
  long long k_max = 0;
  std::vector<Int> sequence;
  FitReport fit;
};

/// Counts block-magic labelings of the directed path with the interior
/// vertices as the block (label sequences in arithmetic progression) and fits
/// the minimal period.
PeriodExperiment directed_period_experiment(int path_edges, long long k_max,
                                            bool force = false);

/// Distinct labels 1..|E| with pairwise-distinct oriented sums, or nothing.
std::optional<Labeling> search_directed_antimagic(const Multigraph& g, bool force = false);

}  // namespace labcount
