#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace labcount {

/// A finite multigraph: vertices 0..n-1, an ordered edge list that may contain
/// loops (u == v) and parallel edges. Edge identity is positional: edge i is
/// the i-th line of the source file. When directed, edge (u, v) is oriented
/// with tail u and head v.
struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  bool directed = false;

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool operator==(const Multigraph&) const = default;
};

/// Strictly increasing vertex indices, all < n.
using VertexSubset = std::vector<int>;

void validate_subset(const Multigraph& g, const VertexSubset& s);

/// Parses the graph file format: '#' comment lines and blank lines ignored;
/// `graph directed|undirected`, then `vertices <n>`, then one `<u> <v>` line
/// per edge. Errors name the offending line.
Multigraph parse_graph(const std::string& text);

/// Canonical text form; parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const Multigraph& g);

/// True iff g with all loops removed admits a proper 2-coloring. Undirected only.
bool loopless_is_bipartite(const Multigraph& g);

struct ComponentReport {
  std::vector<std::vector<int>> components;  // sorted vertex lists, by min vertex
  int k2_components = 0;        // 2 vertices, exactly 1 edge, no loops
  int sum_tied_components = 0;  // 2 vertices, no loops, any number of parallel edges
};

/// Connected components by edge connectivity, orientation ignored.
ComponentReport component_analysis(const Multigraph& g);

/// The quotient construction: vertex set s reindexed 0..|s|-1 in order; edges
/// inside s kept, boundary edges become loops at their s-endpoint, outside
/// edges dropped. Edge order inherited from g.
Multigraph magic_quotient(const Multigraph& g, const VertexSubset& s);

/// Deterministic, restartable enumeration of all connected simple undirected
/// graphs on exactly n labeled vertices, as edge subsets of K_n in
/// lexicographic order of their characteristic vectors (edge (0,1) most
/// significant). With include_multi, each simple graph is followed by its
/// variants with one chosen edge doubled (the duplicate appended at the end
/// of the edge list).
class ConnectedGraphStream {
 public:
  explicit ConnectedGraphStream(int n, bool include_multi = false,
                                std::uint64_t start_index = 0);
  std::optional<Multigraph> next();
  std::uint64_t index() const { return index_; }  // index of the next graph emitted

 private:
  int n_;
  bool include_multi_;
  std::uint64_t mask_ = 0;     // next characteristic vector to examine
  std::uint64_t mask_end_;
  int multi_pos_ = -1;         // -1: emit simple graph next; >= 0: double edge at pos
  std::uint64_t index_ = 0;
  std::vector<std::pair<int, int>> universe_;
  std::optional<Multigraph> current_;  // simple graph for pending multi variants
};

/// Materialized stream, for survey-sized n.
std::vector<Multigraph> connected_graphs(int n, bool include_multi = false);

}  // namespace labcount
