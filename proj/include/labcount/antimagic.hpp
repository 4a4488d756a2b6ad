#pragma once

#include "labcount/labelings.hpp"
#include "labcount/multigraph.hpp"
#include "labcount/numeric.hpp"

#include <optional>
#include <vector>

namespace labcount {

/// Set partition with its partition-lattice Möbius value
/// mu(0, pi) = prod over blocks of (-1)^(|B|-1) (|B|-1)!.
struct VertexPartition {
  std::vector<VertexSubset> blocks;  // sorted by minimum element
  Int mobius;
};

/// All set partitions of {0..n-1} in restricted-growth-string order.
std::vector<VertexPartition> partitions_with_mobius(int n, bool force = false);

/// A_G(k) by Möbius inclusion-exclusion over the partition lattice:
/// sum over partitions of mu(pi) * (positive block-magic count of pi).
Int count_weak_antimagic_ie(const Multigraph& g, long long k, bool force = false);

/// A labeling using each of 1..|E| exactly once with pairwise-distinct vertex
/// sums, or nothing after exhaustive backtracking. Deterministic: the first
/// witness in lexicographic order along the search's edge-assignment order
/// (edges by decreasing endpoint degree sum, ties by edge index).
std::optional<Labeling> search_strict_antimagic(const Multigraph& g, bool force = false);

/// A labeling with labels in [1, k_bound] (repetition allowed) and distinct
/// sums, or nothing. Same determinism rule as the strict search.
std::optional<Labeling> search_weak_antimagic(const Multigraph& g, long long k_bound,
                                              bool force = false);

struct Pml2Report {
  bool applicable = false;  // false when the graph has a K_2 component
  bool bipartite = false;   // loopless_is_bipartite
  struct Check {
    long long bound = 0;
    bool found = false;
    Labeling witness;
  };
  std::vector<Check> checks;  // bound 2|E| always; bound |E| when bipartite
};

/// Checks A_G(2|E|) > 0 by search, plus A_G(|E|) > 0 when loopless-bipartite.
Pml2Report verify_pml2(const Multigraph& g, bool force = false);

}  // namespace labcount
