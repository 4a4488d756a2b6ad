#include "labcount/antimagic.hpp"

#include "labcount/errors.hpp"

#include <algorithm>

namespace labcount {

std::vector<VertexPartition> partitions_with_mobius(int n, bool force) {
  if (n < 1) throw usage_error("partitions require n >= 1");
  if (n > 10 && !force)
    throw guardrail_error("partition enumeration guardrail: n > 10 (use force)");

  std::vector<VertexPartition> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);

  auto emit = [&] {
    int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    VertexPartition part;
    part.blocks.assign(static_cast<std::size_t>(nblocks), {});
    for (int v = 0; v < n; ++v)
      part.blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(v)])].push_back(v);
    part.mobius = 1;
    for (const auto& block : part.blocks) {
      Int factor = 1;
      for (std::size_t i = 2; i < block.size(); ++i) factor *= Int(i);  // (|B|-1)!
      if (block.size() % 2 == 0) factor = -factor;                      // (-1)^(|B|-1)
      part.mobius *= factor;
    }
    out.push_back(std::move(part));
  };

  // Restricted growth strings: rgs[0] = 0, rgs[i] <= max(prefix) + 1.
  auto recurse = [&](auto&& self, int i, int prefix_max) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (int b = 0; b <= prefix_max + 1; ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(prefix_max, b));
    }
  };
  recurse(recurse, 1, 0);
  return out;
}

Int count_weak_antimagic_ie(const Multigraph& g, long long k, bool force) {
  if (k < 0) throw usage_error("k must be nonnegative");
  Int total = 0;
  for (const auto& part : partitions_with_mobius(g.n, force))
    total += part.mobius *
             count_block_magic(g, part.blocks, k, Positivity::positive, Engine::dp, force);
  return total;
}

namespace {

// Shared backtracking core for the witness searches. Edges are assigned in
// decreasing order of endpoint degree sum (ties by edge index); label values
// ascend, so the first witness found is the lexicographically first along the
// assignment order. A branch dies as soon as a fully-labeled vertex repeats a
// completed sum.
struct WitnessSearch {
  const Multigraph& g;
  long long bound;
  bool distinct_labels;

  std::vector<int> order;            // assignment order -> edge index
  std::vector<long long> assigned;   // labels in assignment order
  std::vector<long long> sums;       // running vertex sums
  std::vector<int> remaining;        // unassigned incidences per vertex
  std::vector<bool> used;            // labels used (strict mode)
  std::vector<long long> completed;  // sums of fully-labeled vertices
  bool dead_on_arrival = false;      // two isolated vertices share sum 0

  WitnessSearch(const Multigraph& graph, long long k_bound, bool strict)
      : g(graph), bound(k_bound), distinct_labels(strict) {
    std::vector<int> degree(static_cast<std::size_t>(g.n), 0);
    for (auto [u, v] : g.edges) {
      ++degree[static_cast<std::size_t>(u)];
      if (u != v) ++degree[static_cast<std::size_t>(v)];
    }
    order.resize(g.edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      auto weight = [&](int e) {
        auto [u, v] = g.edges[static_cast<std::size_t>(e)];
        return degree[static_cast<std::size_t>(u)] + degree[static_cast<std::size_t>(v)];
      };
      return weight(a) > weight(b);
    });
    assigned.assign(order.size(), 0);
    sums.assign(static_cast<std::size_t>(g.n), 0);
    remaining = degree;
    if (distinct_labels && bound >= 0) used.assign(static_cast<std::size_t>(bound) + 1, false);
    for (int v = 0; v < g.n; ++v)
      if (degree[static_cast<std::size_t>(v)] == 0) {
        if (std::find(completed.begin(), completed.end(), 0LL) != completed.end())
          dead_on_arrival = true;
        completed.push_back(0);
      }
  }

  void endpoints(int e, int out[2], int& count) const {
    auto [u, v] = g.edges[static_cast<std::size_t>(e)];
    out[0] = u;
    out[1] = v;
    count = u == v ? 1 : 2;
  }

  void apply_label(int e, long long delta) {
    auto [u, v] = g.edges[static_cast<std::size_t>(e)];
    if (!g.directed) {
      sums[static_cast<std::size_t>(u)] += delta;
      if (u != v) sums[static_cast<std::size_t>(v)] += delta;
    } else if (u != v) {
      sums[static_cast<std::size_t>(u)] += delta;
      sums[static_cast<std::size_t>(v)] -= delta;
    }
  }

  // Decrements both endpoints' remaining counts and records completed sums.
  // On a duplicate sum, reverts everything it did and returns false.
  bool settle(int e, int& closed) {
    int ep[2], cnt;
    endpoints(e, ep, cnt);
    closed = 0;
    for (int i = 0; i < cnt; ++i) --remaining[static_cast<std::size_t>(ep[i])];
    for (int i = 0; i < cnt; ++i) {
      int w = ep[i];
      if (remaining[static_cast<std::size_t>(w)] != 0) continue;
      long long s = sums[static_cast<std::size_t>(w)];
      if (std::find(completed.begin(), completed.end(), s) != completed.end()) {
        while (closed-- > 0) completed.pop_back();
        closed = 0;
        for (int j = 0; j < cnt; ++j) ++remaining[static_cast<std::size_t>(ep[j])];
        return false;
      }
      completed.push_back(s);
      ++closed;
    }
    return true;
  }

  void unsettle(int e, int closed) {
    int ep[2], cnt;
    endpoints(e, ep, cnt);
    while (closed-- > 0) completed.pop_back();
    for (int j = 0; j < cnt; ++j) ++remaining[static_cast<std::size_t>(ep[j])];
  }

  bool search(std::size_t pos) {
    if (pos == order.size()) return true;  // all vertices settled along the way
    int e = order[pos];
    for (long long label = 1; label <= bound; ++label) {
      if (distinct_labels && used[static_cast<std::size_t>(label)]) continue;
      assigned[pos] = label;
      if (distinct_labels) used[static_cast<std::size_t>(label)] = true;
      apply_label(e, label);
      int closed = 0;
      if (settle(e, closed)) {
        if (search(pos + 1)) return true;
        unsettle(e, closed);
      }
      apply_label(e, -label);
      if (distinct_labels) used[static_cast<std::size_t>(label)] = false;
    }
    return false;
  }

  std::optional<Labeling> run() {
    if (dead_on_arrival) return std::nullopt;
    if (g.edge_count() == 0) return Labeling{};
    if (bound < 1) return std::nullopt;
    if (!search(0)) return std::nullopt;
    Labeling witness(g.edges.size(), 0);
    for (std::size_t pos = 0; pos < order.size(); ++pos)
      witness[static_cast<std::size_t>(order[pos])] = assigned[pos];
    return witness;
  }
};

}  // namespace

std::optional<Labeling> search_strict_antimagic(const Multigraph& g, bool force) {
  if (g.edge_count() > 12 && !force)
    throw guardrail_error("strict antimagic search guardrail: |E| > 12 (use force)");
  WitnessSearch search(g, g.edge_count(), true);
  return search.run();
}

std::optional<Labeling> search_weak_antimagic(const Multigraph& g, long long k_bound,
                                              bool force) {
  if (k_bound < 0) throw usage_error("label bound must be nonnegative");
  if (!force) {
    Int candidates = int_pow(Int(k_bound), static_cast<unsigned long>(g.edge_count()));
    if (candidates > 1'000'000'000)
      throw guardrail_error("weak antimagic search guardrail: " + candidates.str() +
                            " candidate labelings (use force)");
  }
  WitnessSearch search(g, k_bound, false);
  return search.run();
}

Pml2Report verify_pml2(const Multigraph& g, bool force) {
  (void)force;  // the internal searches always override the counting guardrail
  Pml2Report report;
  if (component_analysis(g).k2_components > 0) return report;  // not applicable
  report.applicable = true;
  report.bipartite = loopless_is_bipartite(g);

  auto add_check = [&](long long bound) {
    Pml2Report::Check check;
    check.bound = bound;
    // These searches stay fast because witnesses are abundant; the exhaustive
    // guardrail is meant for counting, so it is overridden here.
    auto witness = search_weak_antimagic(g, bound, true);
    check.found = witness.has_value();
    if (witness) check.witness = *witness;
    report.checks.push_back(std::move(check));
  };
  add_check(2LL * g.edge_count());
  if (report.bipartite) add_check(g.edge_count());
  return report;
}

}  // namespace labcount
