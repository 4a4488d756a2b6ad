#pragma once

#include "labcount/multigraph.hpp"
#include "labcount/numeric.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace labcount {

/// One nonnegative label per edge position.
using Labeling = std::vector<long long>;
/// One sum per vertex; nonnegative in undirected mode, any sign in directed
/// mode (oriented sum = out minus in, loops contribute 0).
using SumVector = std::vector<long long>;
/// Pairwise disjoint vertex blocks; vertices outside all blocks are
/// unconstrained. Blocks of size one impose nothing.
using BlockSpec = std::vector<VertexSubset>;

void validate_blocks(const Multigraph& g, const BlockSpec& blocks);

/// s(v): undirected, each loop counted once; directed, tail minus head.
SumVector vertex_sums(const Multigraph& g, const Labeling& labels);

enum class Positivity { nonneg, positive };
enum class Engine { brute, dp };

enum class LabelingPredicate {
  none,
  magic_index,               // all sums equal `index`
  block_magic,               // sums constant within each block
  distinct_sums,             // all n sums pairwise distinct
  distinct_labels_and_sums,  // labels pairwise distinct and sums distinct
};

struct EnumSpec {
  long long k = 0;
  Positivity positivity = Positivity::nonneg;
  LabelingPredicate predicate = LabelingPredicate::none;
  long long index = 0;  // for magic_index
  BlockSpec blocks;     // for block_magic
  bool force = false;
};

/// Serial reference enumerator: streams all (positive) k-labelings satisfying
/// the predicate in lexicographic order. The visitor may return false to stop.
/// This is the oracle backbone every accelerated counter is tested against.
void enumerate_labelings(const Multigraph& g, const EnumSpec& spec,
                         const std::function<bool(const Labeling&)>& visit);

/// Serial reference counter over the same odometer as enumerate_labelings.
Int count_brute_serial(const Multigraph& g, const EnumSpec& spec);
/// OpenMP counter split on the leading edge label; totals are combined in
/// label order and always equal the serial count exactly.
Int count_brute_parallel(const Multigraph& g, const EnumSpec& spec);

/// General DP task: per-edge label ranges, block equalities, and an optional
/// fixed target sum per block (free targets are discovered at the first
/// completed vertex of the block).
struct DpTask {
  std::vector<std::pair<long long, long long>> edge_ranges;
  BlockSpec blocks;
  std::vector<std::optional<long long>> targets;  // empty = all free
  bool force = false;
};
Int count_dp(const Multigraph& g, const DpTask& task);

/// H_G(r): labelings with every vertex sum equal to r. Labels need no a
/// priori bound: each edge meets a vertex of sum r, so labels lie in [0, r].
Int count_magic_by_index(const Multigraph& g, long long r, Engine engine = Engine::dp,
                         bool force = false);

/// M_S(k) / M°_S(k) and their multi-block generalizations: labelings with
/// labels in [0,k] (or [1,k]) whose sums are constant within each block.
/// Works in directed mode with oriented sums.
Int count_block_magic(const Multigraph& g, const BlockSpec& blocks, long long k,
                      Positivity positivity, Engine engine = Engine::dp,
                      bool force = false);

/// A_G(k): labels in [1,k], all n vertex sums pairwise distinct.
Int count_weak_antimagic_direct(const Multigraph& g, long long k, bool force = false);

/// B_G(k): pairwise-distinct labels in [1,k] and pairwise-distinct sums;
/// zero whenever k < |E|.
Int count_strict_antimagic(const Multigraph& g, long long k, bool force = false);

}  // namespace labcount
